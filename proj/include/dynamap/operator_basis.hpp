#pragma once

#include "dynamap/complex_matrix.hpp"

#include <memory>
#include <vector>

namespace dynamap {

/// Ordered Hermitian operator basis {F_0 = 1, F_1, ..., F_{N^2-1}} with
/// Tr[F_mu F_nu] = N delta_{mu nu}.
///
/// Construction is the generalized Gell-Mann family: symmetric pairs, then
/// antisymmetric pairs (both in lexicographic (j,k) order), then the diagonal
/// ladder, every element rescaled to Tr[F^2] = N. The ordering is part of the
/// public contract; coefficient vectors and serialized maps depend on it.
class HermitianBasis {
public:
    static HermitianBasis build(std::size_t dim);
    static std::shared_ptr<const HermitianBasis> build_shared(std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return elements_.size(); } // N^2
    const ComplexMatrix& element(std::size_t mu) const { return elements_[mu]; }
    const std::vector<ComplexMatrix>& elements() const { return elements_; }

    /// max_{mu,nu} |Tr[F_mu F_nu] - N delta_{mu nu}|
    double gram_residual() const;

private:
    HermitianBasis(std::size_t dim, std::vector<ComplexMatrix> elements)
        : dim_(dim), elements_(std::move(elements)) {}

    std::size_t dim_;
    std::vector<ComplexMatrix> elements_;
};

/// Expansion coefficients c_mu = Tr[F_mu Q] / N, split into the trace
/// component c_0 and the traceless components c_1..c_{N^2-1}. A density
/// matrix has c_0 = 1/N and real traceless components.
struct CoefficientVector {
    cplx trace_part{};
    std::vector<cplx> traceless_part;

    std::size_t size() const { return traceless_part.size() + 1; }
    cplx coefficient(std::size_t mu) const {
        return mu == 0 ? trace_part : traceless_part[mu - 1];
    }
};

CoefficientVector expand(const ComplexMatrix& q, const HermitianBasis& basis);

/// Q = sum_mu c_mu F_mu; exact inverse of expand by the Gram condition.
ComplexMatrix reconstruct(const CoefficientVector& c, const HermitianBasis& basis);

} // namespace dynamap
