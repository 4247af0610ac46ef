#include "dynamap/matrix_maps.hpp"

#include "dynamap/errors.hpp"
#include "dynamap/detail/format.hpp"


#include <utility>

namespace dynamap {

LinearMatrixMap::LinearMatrixMap(std::shared_ptr<const HermitianBasis> basis,
                                 std::vector<ComplexMatrix> images)
    : basis_(std::move(basis)), images_(std::move(images)) {
    if (!basis_) {
        throw InvalidArgument("LinearMatrixMap: null basis");
    }
    if (images_.size() != basis_->size()) {
        throw DimensionMismatch("LinearMatrixMap: expected " + std::to_string(basis_->size()) +
                                " images, got " + std::to_string(images_.size()));
    }
    for (const ComplexMatrix& im : images_) {
        if (im.dim() != basis_->dim()) {
            throw DimensionMismatch("LinearMatrixMap: image dimension " +
                                    std::to_string(im.dim()) + " does not match basis");
        }
    }
}

LinearMatrixMap LinearMatrixMap::identity(std::shared_ptr<const HermitianBasis> basis) {
    std::vector<ComplexMatrix> images = basis->elements();
    return LinearMatrixMap(std::move(basis), std::move(images));
}

LinearMatrixMap LinearMatrixMap::transpose(std::shared_ptr<const HermitianBasis> basis) {
    std::vector<ComplexMatrix> images;
    images.reserve(basis->size());
    for (const ComplexMatrix& f : basis->elements()) {
        images.push_back(f.transpose());
    }
    return LinearMatrixMap(std::move(basis), std::move(images));
}

AffineMatrixMap::AffineMatrixMap(LinearMatrixMap linear_part, ComplexMatrix offset,
                                 const Tolerances& tol)
    : linear_(std::move(linear_part)), offset_(std::move(offset)) {
    if (offset_.dim() != linear_.dim()) {
        throw DimensionMismatch("AffineMatrixMap: offset dimension does not match linear part");
    }
    const double residual = offset_.hermiticity_residual();
    if (!(residual <= tol.tol_herm)) {
        throw NotHermitian("AffineMatrixMap: offset Hermiticity residual " +
                           detail::format_residual(residual));
    }
}

ComplexMatrix apply_linear(const LinearMatrixMap& map, const ComplexMatrix& q) {
    const CoefficientVector c = expand(q, map.basis());
    ComplexMatrix out(map.dim());
    for (std::size_t mu = 0; mu < map.basis().size(); ++mu) {
        out.axpy(c.coefficient(mu), map.image(mu));
    }
    return out;
}

ComplexMatrix apply_affine(const AffineMatrixMap& map, const ComplexMatrix& q) {
    ComplexMatrix out = apply_linear(map.linear_part(), q);
    out += map.offset();
    return out;
}

LinearMatrixMap affine_to_linear(const AffineMatrixMap& map) {
    const double n = static_cast<double>(map.dim());
    std::vector<ComplexMatrix> images = map.linear_part().images();
    images[0].axpy(n, map.offset()); // 1' = L(1) + N K
    return LinearMatrixMap(map.linear_part().shared_basis(), std::move(images));
}

AffineMatrixMap linear_to_affine(const LinearMatrixMap& map) {
    const double n = static_cast<double>(map.dim());
    std::vector<ComplexMatrix> images = map.images();
    ComplexMatrix offset = images[0];
    images[0] = ComplexMatrix::identity(map.dim());
    offset -= images[0];
    offset *= 1.0 / n; // K = (1' - 1)/N
    return AffineMatrixMap(LinearMatrixMap(map.shared_basis(), std::move(images)),
                           std::move(offset));
}

LinearMatrixMap compose_linear(const LinearMatrixMap& t2, const LinearMatrixMap& t1) {
    if (t2.dim() != t1.dim()) {
        throw DimensionMismatch("compose_linear: dimensions do not agree");
    }
    std::vector<ComplexMatrix> images;
    images.reserve(t1.basis().size());
    for (const ComplexMatrix& im : t1.images()) {
        images.push_back(apply_linear(t2, im));
    }
    return LinearMatrixMap(t1.shared_basis(), std::move(images));
}

AffineMatrixMap compose_affine(const AffineMatrixMap& m2, const AffineMatrixMap& m1) {
    if (m2.dim() != m1.dim()) {
        throw DimensionMismatch("compose_affine: dimensions do not agree");
    }
    LinearMatrixMap linear = compose_linear(m2.linear_part(), m1.linear_part());
    ComplexMatrix offset = apply_linear(m2.linear_part(), m1.offset());
    offset += m2.offset();
    return AffineMatrixMap(std::move(linear), std::move(offset));
}

} // namespace dynamap
