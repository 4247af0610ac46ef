// AVX2 + FMA variants of the dense complex kernels. Compiled with
// -mavx2 -mfma on this translation unit only; callers reach it through the
// runtime-dispatched table, never directly.

#if defined(__x86_64__) || defined(_M_X64)

#include "dynamap/kernels.hpp"

#include <immintrin.h>

#include <cstring>

namespace dynamap::kernels {

namespace {

// A __m256d holds two interleaved complex doubles [x0.re, x0.im, x1.re, x1.im].
// For a broadcast scalar a = ar + i*ai and a vector chunk v, the product is
//   fmaddsub(ar, v, ai * swap(v))
// where swap exchanges re/im lanes: even lanes get ar*re - ai*im and odd
// lanes get ar*im + ai*re.
inline __m256d cmul_broadcast(__m256d v_re, __m256d v_im, __m256d v) {
    const __m256d swapped = _mm256_permute_pd(v, 0x5);
    return _mm256_fmaddsub_pd(v_re, v, _mm256_mul_pd(v_im, swapped));
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d sum2 = _mm_add_pd(lo, hi);
    const __m128d swap = _mm_unpackhi_pd(sum2, sum2);
    return _mm_cvtsd_f64(_mm_add_sd(sum2, swap));
}

void axpy_avx2(std::size_t n, cplx a, const cplx* x, cplx* y) {
    const __m256d v_re = _mm256_set1_pd(a.real());
    const __m256d v_im = _mm256_set1_pd(a.imag());
    auto* yd = reinterpret_cast<double*>(y);
    const auto* xd = reinterpret_cast<const double*>(x);
    std::size_t i = 0;
    const std::size_t n2 = n & ~std::size_t{1};
    for (; i < n2; i += 2) {
        const __m256d vx = _mm256_loadu_pd(xd + 2 * i);
        const __m256d vy = _mm256_loadu_pd(yd + 2 * i);
        _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(vy, cmul_broadcast(v_re, v_im, vx)));
    }
    for (; i < n; ++i) {
        y[i] += a * x[i];
    }
}

void scal_avx2(std::size_t n, cplx a, cplx* x) {
    const __m256d v_re = _mm256_set1_pd(a.real());
    const __m256d v_im = _mm256_set1_pd(a.imag());
    auto* xd = reinterpret_cast<double*>(x);
    std::size_t i = 0;
    const std::size_t n2 = n & ~std::size_t{1};
    for (; i < n2; i += 2) {
        const __m256d vx = _mm256_loadu_pd(xd + 2 * i);
        _mm256_storeu_pd(xd + 2 * i, cmul_broadcast(v_re, v_im, vx));
    }
    for (; i < n; ++i) {
        x[i] *= a;
    }
}

void scale_store_avx2(std::size_t n, cplx a, const cplx* x, cplx* y) {
    const __m256d v_re = _mm256_set1_pd(a.real());
    const __m256d v_im = _mm256_set1_pd(a.imag());
    const auto* xd = reinterpret_cast<const double*>(x);
    auto* yd = reinterpret_cast<double*>(y);
    std::size_t i = 0;
    const std::size_t n2 = n & ~std::size_t{1};
    for (; i < n2; i += 2) {
        const __m256d vx = _mm256_loadu_pd(xd + 2 * i);
        _mm256_storeu_pd(yd + 2 * i, cmul_broadcast(v_re, v_im, vx));
    }
    for (; i < n; ++i) {
        y[i] = a * x[i];
    }
}

// sum conj(x)*y. Real part: xr*yr + xi*yi lands on both lanes of x*y, so a
// plain product accumulator hsums to the answer. Imaginary part: xr*yi - xi*yr
// is swap(x)*y with alternating lane signs [-,+,-,+].
cplx dot_conj_avx2(std::size_t n, const cplx* x, const cplx* y) {
    const __m256d sign = _mm256_set_pd(1.0, -1.0, 1.0, -1.0);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    const auto* xd = reinterpret_cast<const double*>(x);
    const auto* yd = reinterpret_cast<const double*>(y);
    std::size_t i = 0;
    const std::size_t n2 = n & ~std::size_t{1};
    for (; i < n2; i += 2) {
        const __m256d vx = _mm256_loadu_pd(xd + 2 * i);
        const __m256d vy = _mm256_loadu_pd(yd + 2 * i);
        acc_re = _mm256_fmadd_pd(vx, vy, acc_re);
        const __m256d vxs = _mm256_permute_pd(vx, 0x5);
        acc_im = _mm256_fmadd_pd(vxs, _mm256_mul_pd(vy, sign), acc_im);
    }
    double re = hsum(acc_re);
    double im = hsum(acc_im);
    for (; i < n; ++i) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

void gemm_nn_avx2(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
    std::memset(static_cast<void*>(c), 0, n * n * sizeof(cplx));
    for (std::size_t i = 0; i < n; ++i) {
        cplx* crow = c + i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            if (aik == cplx{}) {
                continue;
            }
            axpy_avx2(n, aik, b + k * n, crow);
        }
    }
}

void gemm_nc_avx2(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
    for (std::size_t i = 0; i < n; ++i) {
        const cplx* arow = a + i * n;
        for (std::size_t j = 0; j < n; ++j) {
            // A[i,:] . conj(B[j,:]) = conj( dot_conj(A[i,:], B[j,:]) )
            c[i * n + j] = std::conj(dot_conj_avx2(n, arow, b + j * n));
        }
    }
}

} // namespace

const Backend& avx2_backend() {
    static const Backend table{
        "avx2",          axpy_avx2,    scal_avx2,
        scale_store_avx2, dot_conj_avx2, gemm_nn_avx2,
        gemm_nc_avx2,
    };
    return table;
}

} // namespace dynamap::kernels

#endif // x86-64
