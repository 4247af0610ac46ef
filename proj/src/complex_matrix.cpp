#include "dynamap/complex_matrix.hpp"

#include "dynamap/errors.hpp"
#include "dynamap/kernels.hpp"

#include <cmath>

namespace dynamap {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch(std::string(op) + ": dimensions " + std::to_string(a.dim()) +
                                " and " + std::to_string(b.dim()) + " do not agree");
    }
}

} // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_dim(*this, other, "add");
    kernels::active().axpy(entries_.size(), cplx{1.0, 0.0}, other.data(), data());
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_dim(*this, other, "subtract");
    kernels::active().axpy(entries_.size(), cplx{-1.0, 0.0}, other.data(), data());
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) {
    kernels::active().scal(entries_.size(), scale, data());
    return *this;
}

ComplexMatrix& ComplexMatrix::axpy(cplx a, const ComplexMatrix& x) {
    require_same_dim(*this, x, "axpy");
    kernels::active().axpy(entries_.size(), a, x.data(), data());
    return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx sum{};
    for (std::size_t i = 0; i < dim_; ++i) {
        sum += (*this)(i, i);
    }
    return sum;
}

double ComplexMatrix::frobenius_norm() const {
    const cplx dot = kernels::active().dot_conj(entries_.size(), data(), data());
    return std::sqrt(dot.real());
}

double ComplexMatrix::hermiticity_residual() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            sum += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
        }
    }
    return std::sqrt(sum);
}

bool ComplexMatrix::is_finite() const {
    for (const cplx& v : entries_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            return false;
        }
    }
    return true;
}

double ComplexMatrix::max_abs() const {
    double best = 0.0;
    for (const cplx& v : entries_) {
        best = std::max(best, std::abs(v));
    }
    return best;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs += rhs;
    return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs -= rhs;
    return lhs;
}

ComplexMatrix operator*(cplx scale, ComplexMatrix m) {
    m *= scale;
    return m;
}

ComplexMatrix operator*(ComplexMatrix m, cplx scale) {
    m *= scale;
    return m;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    require_same_dim(lhs, rhs, "multiply");
    ComplexMatrix out(lhs.dim());
    kernels::active().gemm_nn(lhs.dim(), lhs.data(), rhs.data(), out.data());
    return out;
}

ComplexMatrix multiply_adjoint(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "multiply_adjoint");
    ComplexMatrix out(a.dim());
    kernels::active().gemm_nc(a.dim(), a.data(), b.data(), out.data());
    return out;
}

ComplexMatrix unitary_conjugate(const ComplexMatrix& u, const ComplexMatrix& x) {
    return multiply_adjoint(u * x, u);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix diff = a;
    diff -= b;
    return diff.frobenius_norm();
}

cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "hs_inner");
    return kernels::active().dot_conj(a.flat().size(), a.data(), b.data());
}

} // namespace dynamap
