#include "dynamap/operator_basis.hpp"

#include "dynamap/errors.hpp"
#include "dynamap/kernels.hpp"

#include <cmath>

namespace dynamap {

HermitianBasis HermitianBasis::build(std::size_t dim) {
    if (dim == 0) {
        throw InvalidArgument("HermitianBasis: dimension must be positive");
    }
    std::vector<ComplexMatrix> elems;
    elems.reserve(dim * dim);
    elems.push_back(ComplexMatrix::identity(dim));

    // Each raw generalized Gell-Mann element has Tr[F^2] = 2.
    const double scale = std::sqrt(static_cast<double>(dim) / 2.0);

    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = j + 1; k < dim; ++k) {
            ComplexMatrix sym(dim);
            sym(j, k) = scale;
            sym(k, j) = scale;
            elems.push_back(std::move(sym));
        }
    }
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = j + 1; k < dim; ++k) {
            ComplexMatrix anti(dim);
            anti(j, k) = cplx{0.0, -scale};
            anti(k, j) = cplx{0.0, scale};
            elems.push_back(std::move(anti));
        }
    }
    for (std::size_t l = 1; l < dim; ++l) {
        // diag(1,...,1,-l,0,...)/sqrt(l(l+1)/2), rank l+1
        ComplexMatrix diag(dim);
        const double factor = scale * std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
        for (std::size_t j = 0; j < l; ++j) {
            diag(j, j) = factor;
        }
        diag(l, l) = -factor * static_cast<double>(l);
        elems.push_back(std::move(diag));
    }
    return HermitianBasis(dim, std::move(elems));
}

std::shared_ptr<const HermitianBasis> HermitianBasis::build_shared(std::size_t dim) {
    return std::make_shared<const HermitianBasis>(build(dim));
}

double HermitianBasis::gram_residual() const {
    const double n = static_cast<double>(dim_);
    double worst = 0.0;
    for (std::size_t mu = 0; mu < elements_.size(); ++mu) {
        for (std::size_t nu = mu; nu < elements_.size(); ++nu) {
            // Tr[F G] = <F, G> for Hermitian F.
            const cplx overlap = hs_inner(elements_[mu], elements_[nu]);
            const double expected = (mu == nu) ? n : 0.0;
            worst = std::max(worst, std::abs(overlap - expected));
        }
    }
    return worst;
}

CoefficientVector expand(const ComplexMatrix& q, const HermitianBasis& basis) {
    if (q.dim() != basis.dim()) {
        throw DimensionMismatch("expand: matrix dim " + std::to_string(q.dim()) +
                                " does not match basis dim " + std::to_string(basis.dim()));
    }
    const double inv_n = 1.0 / static_cast<double>(basis.dim());
    CoefficientVector c;
    c.traceless_part.resize(basis.size() - 1);
    // F Hermitian makes Tr[F Q] = <F, Q>, one conjugated dot per element.
    c.trace_part = inv_n * hs_inner(basis.element(0), q);
    for (std::size_t alpha = 1; alpha < basis.size(); ++alpha) {
        c.traceless_part[alpha - 1] = inv_n * hs_inner(basis.element(alpha), q);
    }
    return c;
}

ComplexMatrix reconstruct(const CoefficientVector& c, const HermitianBasis& basis) {
    if (c.size() != basis.size()) {
        throw DimensionMismatch("reconstruct: coefficient count " + std::to_string(c.size()) +
                                " does not match basis size " + std::to_string(basis.size()));
    }
    ComplexMatrix q(basis.dim());
    for (std::size_t mu = 0; mu < basis.size(); ++mu) {
        q.axpy(c.coefficient(mu), basis.element(mu));
    }
    return q;
}

} // namespace dynamap
