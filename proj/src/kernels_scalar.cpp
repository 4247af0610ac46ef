#include "dynamap/kernels.hpp"

#include <cstring>

namespace dynamap::kernels {

namespace {

void axpy_scalar(std::size_t n, cplx a, const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += a * x[i];
    }
}

void scal_scalar(std::size_t n, cplx a, cplx* x) {
    for (std::size_t i = 0; i < n; ++i) {
        x[i] *= a;
    }
}

void scale_store_scalar(std::size_t n, cplx a, const cplx* x, cplx* y) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = a * x[i];
    }
}

cplx dot_conj_scalar(std::size_t n, const cplx* x, const cplx* y) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

// Row-oriented update: C[i,:] += A[i,k] * B[k,:]. Keeps the inner loop on
// contiguous memory, same ordering as the SIMD variants.
void gemm_nn_scalar(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
    std::memset(static_cast<void*>(c), 0, n * n * sizeof(cplx));
    for (std::size_t i = 0; i < n; ++i) {
        cplx* crow = c + i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            if (aik == cplx{}) {
                continue;
            }
            const cplx* brow = b + k * n;
            for (std::size_t j = 0; j < n; ++j) {
                crow[j] += aik * brow[j];
            }
        }
    }
}

// C[i,j] = sum_k A[i,k] * conj(B[j,k]); rows of both operands are contiguous.
void gemm_nc_scalar(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
    for (std::size_t i = 0; i < n; ++i) {
        const cplx* arow = a + i * n;
        for (std::size_t j = 0; j < n; ++j) {
            const cplx* brow = b + j * n;
            double re = 0.0;
            double im = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                re += arow[k].real() * brow[k].real() + arow[k].imag() * brow[k].imag();
                im += arow[k].imag() * brow[k].real() - arow[k].real() * brow[k].imag();
            }
            c[i * n + j] = {re, im};
        }
    }
}

} // namespace

const Backend& scalar_backend() {
    static const Backend table{
        "scalar",        axpy_scalar,    scal_scalar,
        scale_store_scalar, dot_conj_scalar, gemm_nn_scalar,
        gemm_nc_scalar,
    };
    return table;
}

} // namespace dynamap::kernels
