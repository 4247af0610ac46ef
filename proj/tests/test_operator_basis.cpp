#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynamap/errors.hpp"
#include "dynamap/matrix_core.hpp"
#include "dynamap/operator_basis.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace dynamap;

TEST_CASE("basis at N = 1 and N = 2") {
    const HermitianBasis trivial = HermitianBasis::build(1);
    CHECK(trivial.size() == 1);
    CHECK(std::abs(trivial.element(0)(0, 0) - cplx{1, 0}) == 0.0);
    CHECK(trivial.gram_residual() <= 1e-15);

    const HermitianBasis pauli = HermitianBasis::build(2);
    REQUIRE(pauli.size() == 4);
    // {1, sigma_x, sigma_y, sigma_z} exactly
    CHECK(pauli.element(1)(0, 1) == cplx{1, 0});
    CHECK(pauli.element(1)(1, 0) == cplx{1, 0});
    CHECK(pauli.element(2)(0, 1) == cplx{0, -1});
    CHECK(pauli.element(2)(1, 0) == cplx{0, 1});
    CHECK(pauli.element(3)(0, 0) == cplx{1, 0});
    CHECK(pauli.element(3)(1, 1) == cplx{-1, 0});
    CHECK(pauli.gram_residual() <= 1e-14);
}

TEST_CASE("basis Gram condition and Hermiticity through N = 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const HermitianBasis basis = HermitianBasis::build(n);
        CHECK(basis.size() == n * n);
        CHECK(basis.gram_residual() <= 1e-10);
        for (const ComplexMatrix& f : basis.elements()) {
            CHECK(f.hermiticity_residual() <= 1e-12);
        }
        // traceless beyond the identity
        for (std::size_t alpha = 1; alpha < basis.size(); ++alpha) {
            CHECK(std::abs(basis.element(alpha).trace()) <= 1e-12);
        }
    }
}

TEST_CASE("N = 3 matches the scaled Gell-Mann family") {
    const HermitianBasis basis = HermitianBasis::build(3);
    const double s = std::sqrt(1.5);
    // first symmetric element: s * (E01 + E10)
    CHECK(std::abs(basis.element(1)(0, 1) - cplx{s, 0}) <= 1e-15);
    // first antisymmetric element sits after the three symmetric ones
    CHECK(std::abs(basis.element(4)(0, 1) - cplx{0, -s}) <= 1e-15);
    // final diagonal element: s * sqrt(1/3) * diag(1, 1, -2)
    const double d = s * std::sqrt(1.0 / 3.0);
    CHECK(std::abs(basis.element(8)(2, 2) - cplx{-2.0 * d, 0}) <= 1e-14);
}

TEST_CASE("expand known states at N = 2") {
    const HermitianBasis basis = HermitianBasis::build(2);

    const CoefficientVector ident = expand(ComplexMatrix::identity(2), basis);
    CHECK(std::abs(ident.trace_part - cplx{1, 0}) <= 1e-15);
    for (const cplx& c : ident.traceless_part) {
        CHECK(std::abs(c) <= 1e-15);
    }

    // |0><0| = (1 + sigma_z)/2: c = (1/2, 0, 0, 1/2)
    ComplexMatrix ground(2);
    ground(0, 0) = 1.0;
    const CoefficientVector c = expand(ground, basis);
    CHECK(std::abs(c.trace_part - cplx{0.5, 0}) <= 1e-15);
    CHECK(std::abs(c.traceless_part[0]) <= 1e-15);
    CHECK(std::abs(c.traceless_part[1]) <= 1e-15);
    CHECK(std::abs(c.traceless_part[2] - cplx{0.5, 0}) <= 1e-15);

    CHECK(frobenius_distance(reconstruct(c, basis), ground) <= 1e-15);
}

TEST_CASE("round trips on random matrices") {
    for (std::size_t n : {2, 3, 5}) {
        const HermitianBasis basis = HermitianBasis::build(n);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const ComplexMatrix q = sample_ginibre(n, derive_seed(404, seed * 6 + n));
            CHECK(frobenius_distance(reconstruct(expand(q, basis), basis), q) <= 1e-12);
        }
        // reverse direction: coefficients -> matrix -> coefficients
        std::mt19937_64 rng{derive_seed(405, n)};
        CoefficientVector c;
        c.trace_part = cplx{0.3, -0.2};
        c.traceless_part.resize(n * n - 1);
        for (cplx& v : c.traceless_part) {
            v = cplx{static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5,
                     static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5};
        }
        const CoefficientVector back = expand(reconstruct(c, basis), basis);
        CHECK(std::abs(back.trace_part - c.trace_part) <= 1e-12);
        for (std::size_t i = 0; i < c.traceless_part.size(); ++i) {
            CHECK(std::abs(back.traceless_part[i] - c.traceless_part[i]) <= 1e-12);
        }
    }
}

TEST_CASE("Hermitian matrices have real coefficients and conversely") {
    const HermitianBasis basis = HermitianBasis::build(3);
    const ComplexMatrix h = sample_hermitian(3, 8);
    for (std::size_t mu = 0; mu < basis.size(); ++mu) {
        CHECK(std::abs(expand(h, basis).coefficient(mu).imag()) <= 1e-13);
    }

    CoefficientVector real_c;
    real_c.trace_part = 0.7;
    real_c.traceless_part.assign(8, cplx{0.1, 0.0});
    CHECK(reconstruct(real_c, basis).hermiticity_residual() <= 1e-13);

    const ComplexMatrix g = sample_ginibre(3, 9); // not Hermitian
    double max_imag = 0.0;
    for (std::size_t mu = 0; mu < basis.size(); ++mu) {
        max_imag = std::max(max_imag, std::abs(expand(g, basis).coefficient(mu).imag()));
    }
    CHECK(max_imag > 1e-3);
}

TEST_CASE("dimension mismatches are rejected") {
    const HermitianBasis basis = HermitianBasis::build(2);
    CHECK_THROWS_AS((void)expand(ComplexMatrix::identity(3), basis), DimensionMismatch);

    CoefficientVector short_c;
    short_c.trace_part = 1.0;
    short_c.traceless_part.assign(2, cplx{});
    CHECK_THROWS_AS((void)reconstruct(short_c, basis), DimensionMismatch);
}
