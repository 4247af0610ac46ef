#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynamap/kernels.hpp"

#include <random>
#include <vector>

using dynamap::kernels::Backend;
using dynamap::kernels::cplx;

namespace {

std::vector<cplx> random_array(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<cplx> out(n);
    for (cplx& v : out) {
        const double re = static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
        const double im = static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
        v = {re, im};
    }
    return out;
}

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

std::vector<const Backend*> available_backends() {
    std::vector<const Backend*> backends{&dynamap::kernels::scalar_backend()};
#if defined(__x86_64__) || defined(_M_X64)
    if (dynamap::kernels::avx2_supported()) {
        backends.push_back(&dynamap::kernels::avx2_backend());
    }
#endif
    return backends;
}

} // namespace

TEST_CASE("scalar reference values") {
    const auto& k = dynamap::kernels::scalar_backend();

    std::vector<cplx> y = {{1, 0}, {0, 1}, {2, -1}};
    const std::vector<cplx> x = {{0, 1}, {1, 0}, {1, 1}};
    k.axpy(3, cplx{0, 1}, x.data(), y.data()); // y += i*x
    CHECK(y[0] == cplx{0, 0});                 // 1 + i*i
    CHECK(y[1] == cplx{0, 2});
    CHECK(y[2] == cplx{1, 0});

    const std::vector<cplx> u = {{1, 2}, {0, -1}};
    const std::vector<cplx> v = {{3, 0}, {1, 1}};
    const cplx dot = k.dot_conj(2, u.data(), v.data());
    // conj(1+2i)*3 + conj(-i)*(1+i) = (3-6i) + (-1+i) = 2-5i
    CHECK(dot.real() == doctest::Approx(2.0));
    CHECK(dot.imag() == doctest::Approx(-5.0));
}

TEST_CASE("scalar gemm matches hand computation") {
    const auto& k = dynamap::kernels::scalar_backend();
    // A = [[i, 1],[0, 2]], B = [[1, 0],[1, i]]
    const std::vector<cplx> a = {{0, 1}, {1, 0}, {0, 0}, {2, 0}};
    const std::vector<cplx> b = {{1, 0}, {0, 0}, {1, 0}, {0, 1}};
    std::vector<cplx> c(4);
    k.gemm_nn(2, a.data(), b.data(), c.data());
    CHECK(c[0] == cplx{1, 1});
    CHECK(c[1] == cplx{0, 1});
    CHECK(c[2] == cplx{2, 0});
    CHECK(c[3] == cplx{0, 2});

    // A * B† with B† = [[1, 1],[0, -i]]
    k.gemm_nc(2, a.data(), b.data(), c.data());
    CHECK(c[0] == cplx{0, 1});
    CHECK(c[1] == cplx{0, 0});
    CHECK(c[2] == cplx{0, 0});
    CHECK(c[3] == cplx{0, -2});
}

TEST_CASE("backends agree on every kernel") {
    const auto backends = available_backends();
    REQUIRE(!backends.empty());
    const auto& ref = *backends.front();

    // Odd lengths exercise the SIMD tails.
    for (std::size_t n : {1, 2, 3, 7, 8, 16, 33, 64, 129}) {
        const auto x = random_array(n, 1000 + n);
        const auto y0 = random_array(n, 2000 + n);
        const cplx alpha{0.37, -1.21};

        for (const Backend* b : backends) {
            CAPTURE(b->name);
            CAPTURE(n);

            auto y_ref = y0;
            auto y_b = y0;
            ref.axpy(n, alpha, x.data(), y_ref.data());
            b->axpy(n, alpha, x.data(), y_b.data());
            CHECK(max_abs_diff(y_ref, y_b) <= 1e-14);

            auto s_ref = y0;
            auto s_b = y0;
            ref.scal(n, alpha, s_ref.data());
            b->scal(n, alpha, s_b.data());
            CHECK(max_abs_diff(s_ref, s_b) <= 1e-14);

            std::vector<cplx> t_ref(n);
            std::vector<cplx> t_b(n);
            ref.scale_store(n, alpha, x.data(), t_ref.data());
            b->scale_store(n, alpha, x.data(), t_b.data());
            CHECK(max_abs_diff(t_ref, t_b) <= 1e-14);

            const cplx d_ref = ref.dot_conj(n, x.data(), y0.data());
            const cplx d_b = b->dot_conj(n, x.data(), y0.data());
            CHECK(std::abs(d_ref - d_b) <= 1e-12 * std::max(1.0, std::abs(d_ref)));
        }
    }

    for (std::size_t dim : {1, 2, 3, 4, 5, 9, 16, 25}) {
        const auto a = random_array(dim * dim, 31 + dim);
        const auto bm = random_array(dim * dim, 57 + dim);
        std::vector<cplx> c_ref(dim * dim);
        std::vector<cplx> c_b(dim * dim);
        for (const Backend* b : backends) {
            CAPTURE(b->name);
            CAPTURE(dim);
            ref.gemm_nn(dim, a.data(), bm.data(), c_ref.data());
            b->gemm_nn(dim, a.data(), bm.data(), c_b.data());
            CHECK(max_abs_diff(c_ref, c_b) <= 1e-12);

            ref.gemm_nc(dim, a.data(), bm.data(), c_ref.data());
            b->gemm_nc(dim, a.data(), bm.data(), c_b.data());
            CHECK(max_abs_diff(c_ref, c_b) <= 1e-12);
        }
    }
}

TEST_CASE("active backend is one of the registered tables") {
    const auto& active = dynamap::kernels::active();
    bool known = false;
    for (const Backend* b : available_backends()) {
        known = known || (b->name == active.name);
    }
    CHECK(known);
}
