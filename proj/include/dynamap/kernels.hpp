#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace dynamap::kernels {

using cplx = std::complex<double>;

/// Table of dense complex kernels operating on contiguous arrays.
///
/// Matrices are row-major with the dimension passed per call. Every entry
/// has a scalar reference implementation; SIMD variants are selected at
/// runtime and must agree with the reference to rounding error (covered by
/// the kernel equivalence tests). Output buffers must not alias inputs for
/// the gemm kernels.
struct Backend {
    std::string_view name;

    /// y += a * x
    void (*axpy)(std::size_t n, cplx a, const cplx* x, cplx* y);
    /// x *= a
    void (*scal)(std::size_t n, cplx a, cplx* x);
    /// y = a * x
    void (*scale_store)(std::size_t n, cplx a, const cplx* x, cplx* y);
    /// sum_i conj(x_i) * y_i
    cplx (*dot_conj)(std::size_t n, const cplx* x, const cplx* y);
    /// C = A * B, all square n x n row-major
    void (*gemm_nn)(std::size_t n, const cplx* a, const cplx* b, cplx* c);
    /// C = A * B^dagger, all square n x n row-major
    void (*gemm_nc)(std::size_t n, const cplx* a, const cplx* b, cplx* c);
};

const Backend& scalar_backend();

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_supported();
const Backend& avx2_backend();
#endif

/// The backend chosen for this process: the best supported variant, or the
/// one named by the DYNAMAP_KERNELS environment variable ("scalar", "avx2").
/// Throws InvalidArgument for an unknown or unsupported request.
const Backend& active();

} // namespace dynamap::kernels
