#pragma once

#include "dynamap/complex_matrix.hpp"
#include "dynamap/operator_basis.hpp"
#include "dynamap/tolerances.hpp"

#include <memory>
#include <vector>

namespace dynamap {

/// Linear map on N x N matrices, stored as the images of the basis elements:
/// images[0] is the image of the identity, images[alpha] the image of
/// F_alpha. The action on arbitrary Q follows by linearity through expand().
class LinearMatrixMap {
public:
    LinearMatrixMap(std::shared_ptr<const HermitianBasis> basis,
                    std::vector<ComplexMatrix> images);

    static LinearMatrixMap identity(std::shared_ptr<const HermitianBasis> basis);
    /// Q -> Q^T, the canonical positive-but-not-CP witness.
    static LinearMatrixMap transpose(std::shared_ptr<const HermitianBasis> basis);

    std::size_t dim() const { return basis_->dim(); }
    const HermitianBasis& basis() const { return *basis_; }
    std::shared_ptr<const HermitianBasis> shared_basis() const { return basis_; }
    const ComplexMatrix& image(std::size_t mu) const { return images_[mu]; }
    const ComplexMatrix& image_of_identity() const { return images_[0]; }
    const std::vector<ComplexMatrix>& images() const { return images_; }

private:
    std::shared_ptr<const HermitianBasis> basis_;
    std::vector<ComplexMatrix> images_;
};

/// Affine map Q -> L(Q) + K with Hermitian offset K.
class AffineMatrixMap {
public:
    AffineMatrixMap(LinearMatrixMap linear_part, ComplexMatrix offset,
                    const Tolerances& tol = {});

    std::size_t dim() const { return linear_.dim(); }
    const LinearMatrixMap& linear_part() const { return linear_; }
    const ComplexMatrix& offset() const { return offset_; }

private:
    LinearMatrixMap linear_;
    ComplexMatrix offset_;
};

ComplexMatrix apply_linear(const LinearMatrixMap& map, const ComplexMatrix& q);
ComplexMatrix apply_affine(const AffineMatrixMap& map, const ComplexMatrix& q);

/// The linear map agreeing with the affine map on every unit-trace matrix:
/// image of identity = L(1) + N K, images of F_alpha unchanged.
LinearMatrixMap affine_to_linear(const AffineMatrixMap& map);

/// The affine map agreeing with the linear map on every unit-trace matrix,
/// with the canonical unital choice L(1) = 1 and K = (1' - 1)/N.
AffineMatrixMap linear_to_affine(const LinearMatrixMap& map);

/// m2 after m1; offset = L2(K1) + K2.
AffineMatrixMap compose_affine(const AffineMatrixMap& m2, const AffineMatrixMap& m1);

LinearMatrixMap compose_linear(const LinearMatrixMap& t2, const LinearMatrixMap& t1);

} // namespace dynamap
