#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynamap/errors.hpp"
#include "dynamap/matrix_core.hpp"
#include "dynamap/matrix_maps.hpp"

#include <algorithm>

using namespace dynamap;

namespace {

LinearMatrixMap random_linear(std::shared_ptr<const HermitianBasis> basis, std::uint64_t seed) {
    std::vector<ComplexMatrix> images;
    for (std::size_t mu = 0; mu < basis->size(); ++mu) {
        images.push_back(sample_ginibre(basis->dim(), derive_seed(seed, mu)));
    }
    return LinearMatrixMap(std::move(basis), std::move(images));
}

AffineMatrixMap random_affine(std::shared_ptr<const HermitianBasis> basis, std::uint64_t seed) {
    const std::size_t dim = basis->dim();
    return AffineMatrixMap(random_linear(std::move(basis), seed),
                           sample_hermitian(dim, derive_seed(seed, 999)));
}

// All images Hermitian, so compositions keep a Hermitian offset.
AffineMatrixMap random_hermiticity_preserving_affine(std::shared_ptr<const HermitianBasis> basis,
                                                     std::uint64_t seed) {
    std::vector<ComplexMatrix> images;
    const std::size_t dim = basis->dim();
    for (std::size_t mu = 0; mu < basis->size(); ++mu) {
        images.push_back(sample_hermitian(dim, derive_seed(seed, mu)));
    }
    return AffineMatrixMap(LinearMatrixMap(std::move(basis), std::move(images)),
                           sample_hermitian(dim, derive_seed(seed, 999)));
}

ComplexMatrix pauli_z() {
    ComplexMatrix z(2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    return z;
}

} // namespace

TEST_CASE("identity and zero maps") {
    auto basis = HermitianBasis::build_shared(3);
    const LinearMatrixMap ident = LinearMatrixMap::identity(basis);
    const ComplexMatrix q = sample_ginibre(3, 3);
    CHECK(frobenius_distance(apply_linear(ident, q), q) <= 1e-12);

    std::vector<ComplexMatrix> zero_images(9, ComplexMatrix(3));
    const LinearMatrixMap zero(basis, zero_images);
    CHECK(apply_linear(zero, q).frobenius_norm() <= 1e-15);
}

TEST_CASE("apply_linear equals the direct image sum") {
    auto basis = HermitianBasis::build_shared(2);
    const LinearMatrixMap map = random_linear(basis, 17);
    const ComplexMatrix q = sample_ginibre(2, 18);

    ComplexMatrix expected(2);
    for (std::size_t mu = 0; mu < basis->size(); ++mu) {
        const cplx c = hs_inner(basis->element(mu), q) / 2.0;
        expected.axpy(c, map.image(mu));
    }
    CHECK(frobenius_distance(apply_linear(map, q), expected) <= 1e-13);
}

TEST_CASE("affine application and mixture law") {
    auto basis = HermitianBasis::build_shared(2);
    const AffineMatrixMap map = random_affine(basis, 23);

    const ComplexMatrix q = sample_ginibre(2, 29);
    ComplexMatrix no_offset = apply_affine(map, q);
    no_offset -= map.offset();
    CHECK(frobenius_distance(no_offset, apply_linear(map.linear_part(), q)) <= 1e-13);

    // identity linear part: Q + K
    const AffineMatrixMap shift(LinearMatrixMap::identity(basis), pauli_z());
    ComplexMatrix expected = q + pauli_z();
    CHECK(frobenius_distance(apply_affine(shift, q), expected) <= 1e-13);

    const ComplexMatrix rho = sample_density_matrix(2, 31).matrix();
    const ComplexMatrix sigma = sample_density_matrix(2, 37).matrix();
    const double mix_q = 0.3;
    ComplexMatrix tau = mix_q * rho;
    tau.axpy(1.0 - mix_q, sigma);
    ComplexMatrix rhs = mix_q * apply_affine(map, rho);
    rhs.axpy(1.0 - mix_q, apply_affine(map, sigma));
    CHECK(frobenius_distance(apply_affine(map, tau), rhs) <= 1e-12);
}

TEST_CASE("affine offset must be Hermitian") {
    auto basis = HermitianBasis::build_shared(2);
    ComplexMatrix skew(2);
    skew(0, 1) = 1.0; // K† != K
    CHECK_THROWS_AS(AffineMatrixMap(LinearMatrixMap::identity(basis), skew), NotHermitian);
}

TEST_CASE("affine_to_linear lands on the matching linear map") {
    auto basis = HermitianBasis::build_shared(2);

    // L = identity, K = sigma_z/2: identity image gains N K = sigma_z
    const AffineMatrixMap m(LinearMatrixMap::identity(basis), 0.5 * pauli_z());
    const LinearMatrixMap t = affine_to_linear(m);
    ComplexMatrix expected_first = ComplexMatrix::identity(2) + pauli_z();
    CHECK(frobenius_distance(t.image_of_identity(), expected_first) <= 1e-14);
    for (std::size_t alpha = 1; alpha < 4; ++alpha) {
        CHECK(frobenius_distance(t.image(alpha), basis->element(alpha)) <= 1e-14);
    }

    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        const AffineMatrixMap m_rand = random_affine(basis, seed);
        const LinearMatrixMap t_rand = affine_to_linear(m_rand);
        double worst = 0.0;
        for (std::size_t i = 0; i < 50; ++i) {
            const ComplexMatrix rho = sample_density_matrix(2, derive_seed(seed, i)).matrix();
            worst = std::max(worst, frobenius_distance(apply_linear(t_rand, rho),
                                                       apply_affine(m_rand, rho)));
        }
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("linear_to_affine uses the canonical unital split") {
    auto basis = HermitianBasis::build_shared(2);

    const AffineMatrixMap ident_split = linear_to_affine(LinearMatrixMap::identity(basis));
    CHECK(frobenius_distance(ident_split.linear_part().image_of_identity(),
                             ComplexMatrix::identity(2)) == 0.0);
    CHECK(ident_split.offset().frobenius_norm() <= 1e-15);

    // replacement map T(Q) = Tr[Q] rho0
    const ComplexMatrix rho0 = sample_density_matrix(2, 55).matrix();
    std::vector<ComplexMatrix> images;
    images.push_back(2.0 * rho0); // image of identity: Tr[1] rho0
    for (std::size_t alpha = 1; alpha < 4; ++alpha) {
        images.emplace_back(2);
    }
    const LinearMatrixMap replace(basis, images);
    const AffineMatrixMap split = linear_to_affine(replace);

    ComplexMatrix expected_offset = rho0;
    expected_offset.axpy(-0.5, ComplexMatrix::identity(2));
    CHECK(frobenius_distance(split.offset(), expected_offset) <= 1e-14);
    for (std::size_t i = 0; i < 20; ++i) {
        const ComplexMatrix rho = sample_density_matrix(2, derive_seed(66, i)).matrix();
        CHECK(frobenius_distance(apply_affine(split, rho), rho0) <= 1e-12);
    }

    // round trip: affine_to_linear . linear_to_affine restores the images
    for (std::uint64_t seed = 300; seed < 310; ++seed) {
        std::vector<ComplexMatrix> herm_images;
        herm_images.push_back(sample_hermitian(2, derive_seed(seed, 0)));
        for (std::size_t mu = 1; mu < 4; ++mu) {
            herm_images.push_back(sample_ginibre(2, derive_seed(seed, mu)));
        }
        const LinearMatrixMap t(basis, herm_images);
        const LinearMatrixMap rebuilt = affine_to_linear(linear_to_affine(t));
        for (std::size_t mu = 0; mu < 4; ++mu) {
            CHECK(frobenius_distance(rebuilt.image(mu), t.image(mu)) <= 1e-12);
        }
    }
}

TEST_CASE("conversion preserves action only on unit trace") {
    auto basis = HermitianBasis::build_shared(2);
    const AffineMatrixMap m(LinearMatrixMap::identity(basis), pauli_z());
    const LinearMatrixMap t = affine_to_linear(m);

    // trace-0 input: affine adds K, linear adds nothing
    const ComplexMatrix traceless = pauli_z();
    const double gap =
        frobenius_distance(apply_affine(m, traceless), apply_linear(t, traceless));
    CHECK(gap > 1.0);
}

TEST_CASE("composition agrees with sequential application") {
    auto basis = HermitianBasis::build_shared(2);
    const AffineMatrixMap m1 = random_hermiticity_preserving_affine(basis, 71);
    const AffineMatrixMap m2 = random_hermiticity_preserving_affine(basis, 72);
    const AffineMatrixMap composed = compose_affine(m2, m1);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const ComplexMatrix q = sample_ginibre(2, derive_seed(73, seed));
        CHECK(frobenius_distance(apply_affine(composed, q),
                                 apply_affine(m2, apply_affine(m1, q))) <= 1e-11);
    }

    // identity on either side
    const AffineMatrixMap ident(LinearMatrixMap::identity(basis), ComplexMatrix(2));
    const AffineMatrixMap left = compose_affine(ident, m1);
    const AffineMatrixMap right = compose_affine(m1, ident);
    const ComplexMatrix probe = sample_ginibre(2, 99);
    CHECK(frobenius_distance(apply_affine(left, probe), apply_affine(m1, probe)) <= 1e-12);
    CHECK(frobenius_distance(apply_affine(right, probe), apply_affine(m1, probe)) <= 1e-12);

    // two pure shifts add their offsets
    const AffineMatrixMap s1(LinearMatrixMap::identity(basis), 0.5 * pauli_z());
    const AffineMatrixMap s2(LinearMatrixMap::identity(basis), 0.25 * pauli_z());
    const AffineMatrixMap both = compose_affine(s2, s1);
    CHECK(frobenius_distance(both.offset(), 0.75 * pauli_z()) <= 1e-14);
}
