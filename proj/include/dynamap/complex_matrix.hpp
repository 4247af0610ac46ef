#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace dynamap {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major, value semantics.
///
/// Arithmetic that is hot (matrix products, scaled accumulation) routes
/// through the runtime-dispatched kernel table.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

    static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    cplx* data() { return entries_.data(); }
    const cplx* data() const { return entries_.data(); }
    std::span<const cplx> flat() const { return entries_; }
    std::span<cplx> flat() { return entries_; }
    const cplx* row(std::size_t i) const { return entries_.data() + i * dim_; }
    cplx* row(std::size_t i) { return entries_.data() + i * dim_; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scale);

    /// this += a * x
    ComplexMatrix& axpy(cplx a, const ComplexMatrix& x);

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    cplx trace() const;
    double frobenius_norm() const;
    /// ‖A − A†‖_F
    double hermiticity_residual() const;
    bool is_finite() const;
    double max_abs() const;

private:
    std::size_t dim_ = 0;
    std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cplx scale, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, cplx scale);

/// Matrix product via the active gemm kernel.
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// A * B†
ComplexMatrix multiply_adjoint(const ComplexMatrix& a, const ComplexMatrix& b);

/// U * X * U†
ComplexMatrix unitary_conjugate(const ComplexMatrix& u, const ComplexMatrix& x);

/// ‖a − b‖_F
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hilbert-Schmidt trace Tr[A† B] via the conjugated dot kernel.
cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace dynamap
