#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynamap/analysis.hpp"
#include "dynamap/errors.hpp"
#include "dynamap/matrix_core.hpp"

#include <algorithm>
#include <cmath>

using namespace dynamap;

namespace {

JointScenario test_scenario(std::size_t n, std::size_t m, std::uint64_t seed) {
    return JointScenario::validated(n, m, sample_hermitian(n * m, seed), "analysis-test");
}

LinearMatrixMap random_hermiticity_preserving(std::shared_ptr<const HermitianBasis> basis,
                                              std::uint64_t seed) {
    std::vector<ComplexMatrix> images;
    for (std::size_t mu = 0; mu < basis->size(); ++mu) {
        images.push_back(sample_hermitian(basis->dim(), derive_seed(seed, mu)));
    }
    return LinearMatrixMap(std::move(basis), std::move(images));
}

} // namespace

TEST_CASE("choi of the identity map is the scaled maximally entangled projector") {
    for (std::size_t n : {2, 3}) {
        auto basis = HermitianBasis::build_shared(n);
        const ChoiMatrix choi = choi_matrix(LinearMatrixMap::identity(basis));
        REQUIRE(choi.matrix.dim() == n * n);
        CHECK(choi.source_dim == n);

        const EigenDecomposition eig = hermitian_eigendecompose(choi.matrix);
        CHECK(eig.eigenvalues.back() == doctest::Approx(static_cast<double>(n)).epsilon(1e-12));
        for (std::size_t i = 0; i + 1 < eig.eigenvalues.size(); ++i) {
            CHECK(std::abs(eig.eigenvalues[i]) <= 1e-10);
        }
    }
}

TEST_CASE("choi of the transpose map is the swap") {
    auto basis = HermitianBasis::build_shared(2);
    const ChoiMatrix choi = choi_matrix(LinearMatrixMap::transpose(basis));
    // SWAP: 1 at (0,0), (3,3), (1,2), (2,1)
    CHECK(std::abs(choi.matrix(0, 0) - cplx{1, 0}) <= 1e-13);
    CHECK(std::abs(choi.matrix(3, 3) - cplx{1, 0}) <= 1e-13);
    CHECK(std::abs(choi.matrix(1, 2) - cplx{1, 0}) <= 1e-13);
    CHECK(std::abs(choi.matrix(2, 1) - cplx{1, 0}) <= 1e-13);
    CHECK(std::abs(choi.matrix(1, 1)) <= 1e-13);

    const CpVerdict verdict = is_completely_positive(LinearMatrixMap::transpose(basis), 1e-9);
    CHECK(!verdict.is_cp);
    CHECK(verdict.min_eigenvalue == doctest::Approx(-1.0).epsilon(1e-12));

    auto basis3 = HermitianBasis::build_shared(3);
    const CpVerdict verdict3 =
        is_completely_positive(LinearMatrixMap::transpose(basis3), 1e-9);
    CHECK(!verdict3.is_cp);
    CHECK(verdict3.min_eigenvalue == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("choi is linear in the map") {
    auto basis = HermitianBasis::build_shared(2);
    const LinearMatrixMap t1 = random_hermiticity_preserving(basis, 61);
    const LinearMatrixMap t2 = random_hermiticity_preserving(basis, 62);

    const double a = 0.7;
    const double b = -1.3;
    std::vector<ComplexMatrix> mixed;
    for (std::size_t mu = 0; mu < basis->size(); ++mu) {
        ComplexMatrix im = a * t1.image(mu);
        im.axpy(b, t2.image(mu));
        mixed.push_back(std::move(im));
    }
    const LinearMatrixMap combo(basis, mixed);

    ComplexMatrix expected = a * choi_matrix(t1).matrix;
    expected.axpy(b, choi_matrix(t2).matrix);
    CHECK(frobenius_distance(choi_matrix(combo).matrix, expected) <= 1e-12);
}

TEST_CASE("unitary conjugation maps have rank-one choi") {
    const ComplexMatrix h = sample_hermitian(3, 67);
    const UnitaryPropagator u = propagator(h, 1.9);
    auto basis = HermitianBasis::build_shared(3);
    std::vector<ComplexMatrix> images;
    for (std::size_t mu = 0; mu < basis->size(); ++mu) {
        images.push_back(unitary_conjugate(u.matrix, basis->element(mu)));
    }
    const LinearMatrixMap conj_map(basis, images);
    const EigenDecomposition eig = hermitian_eigendecompose(choi_matrix(conj_map).matrix);
    CHECK(eig.eigenvalues.front() >= -1e-12);
    CHECK(eig.eigenvalues.back() == doctest::Approx(3.0).epsilon(1e-12));
    for (std::size_t i = 0; i + 1 < eig.eigenvalues.size(); ++i) {
        CHECK(std::abs(eig.eigenvalues[i]) <= 1e-10);
    }
}

TEST_CASE("non-Hermiticity-preserving maps are rejected by the cp check") {
    auto basis = HermitianBasis::build_shared(2);
    std::vector<ComplexMatrix> images;
    for (std::size_t mu = 0; mu < basis->size(); ++mu) {
        images.push_back(sample_ginibre(2, derive_seed(71, mu)));
    }
    const LinearMatrixMap crooked(basis, images);
    CHECK_THROWS_AS((void)is_completely_positive(crooked, 1e-9), NonHermitianChoi);
}

TEST_CASE("trace preservation residual") {
    auto basis = HermitianBasis::build_shared(2);
    CHECK(check_trace_preserving(LinearMatrixMap::identity(basis)) <= 1e-15);

    std::vector<ComplexMatrix> images = basis->elements();
    images[0] *= 2.0; // image of identity doubles: residual |2N - N| = N
    const LinearMatrixMap doubled(basis, images);
    CHECK(check_trace_preserving(doubled) == doctest::Approx(2.0));
}

TEST_CASE("affine physicality report") {
    auto basis = HermitianBasis::build_shared(2);
    const std::vector<DensityMatrix> samples = sample_states(2, 20, 77);

    const AffineMatrixMap ident(LinearMatrixMap::identity(basis), ComplexMatrix(2));
    const AffinePhysicalityReport rep = check_affine_physicality(ident, samples);
    CHECK(rep.trace_residual <= 1e-12);
    CHECK(rep.min_output_eigenvalue >= -1e-12);

    // adding 1/N to the offset pushes the trace to 2
    ComplexMatrix half_identity = ComplexMatrix::identity(2);
    half_identity *= 0.5;
    const AffineMatrixMap shifted(LinearMatrixMap::identity(basis), half_identity);
    const AffinePhysicalityReport rep2 = check_affine_physicality(shifted, samples);
    CHECK(rep2.trace_residual == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("equivalence residual detects a perturbed offset") {
    auto basis = HermitianBasis::build_shared(2);
    const std::vector<DensityMatrix> samples = sample_states(2, 50, 83);

    const JointScenario scn = test_scenario(2, 2, 89);
    std::vector<std::vector<double>> corr(3, std::vector<double>(3, 0.0));
    corr[1][1] = 0.4;
    const InitialAssignment a =
        InitialAssignment::validated(std::vector<double>(3, 0.0), corr);
    const AffineDecomposition dec = affine_decomposition(scn, a, 1.2);

    const AffineMatrixMap affine = dec.affine();
    CHECK(equivalence_residual(affine, dec.full_linear, samples) <= 1e-10);

    ComplexMatrix z(2);
    z(0, 0) = 0.1;
    z(1, 1) = -0.1;
    ComplexMatrix perturbed_offset = dec.offset + z;
    const AffineMatrixMap crooked(dec.cp_part, perturbed_offset);
    const double residual = equivalence_residual(crooked, dec.full_linear, samples);
    // the perturbation passes straight through: residual = ||sigma_z/10||_F
    CHECK(residual == doctest::Approx(std::sqrt(2.0) / 10.0).epsilon(1e-9));
}

TEST_CASE("time sweep reports are ordered and internally consistent") {
    const JointScenario scn = test_scenario(2, 2, 97);
    const InitialAssignment zero = InitialAssignment::zero(2, 2);
    const std::vector<double> times = {0.0, 2.5, 1.0, 0.5}; // deliberately unsorted

    AnalysisOptions options;
    options.sample_count = 10;
    const std::vector<MapAnalysisReport> reports = time_sweep(scn, zero, times, options);
    REQUIRE(reports.size() == 4);
    CHECK(std::is_sorted(reports.begin(), reports.end(),
                         [](const auto& x, const auto& y) { return x.time < y.time; }));

    for (const MapAnalysisReport& r : reports) {
        CHECK(r.is_cp);
        CHECK(r.is_cp_cp_part);
        CHECK(r.trace_residual <= 1e-10);
        CHECK(r.equivalence_residual <= 1e-9);
        for (double d : r.d_parameters) {
            CHECK(std::abs(d) <= 1e-10);
        }
        CHECK((r.is_cp == (r.min_choi_eigenvalue >= -options.tol.tol_psd)));
    }

    // t = 0 row is the identity map: top Choi eigenvalue N, so min is 0
    CHECK(reports.front().time == 0.0);
    CHECK(std::abs(reports.front().min_choi_eigenvalue) <= 1e-12);
}
