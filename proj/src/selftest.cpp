#include "dynamap/selftest.hpp"

#include "dynamap/analysis.hpp"
#include "dynamap/demo.hpp"
#include "dynamap/matrix_core.hpp"
#include "dynamap/matrix_maps.hpp"
#include "dynamap/operator_basis.hpp"
#include "dynamap/reduced_dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

namespace dynamap::selftest {

namespace {

constexpr std::array<std::pair<std::size_t, std::size_t>, 3> kJointDims = {
    {{2, 2}, {2, 3}, {3, 2}}};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Linear map with arbitrary complex images.
LinearMatrixMap random_map(std::shared_ptr<const HermitianBasis> basis, std::mt19937_64& rng) {
    std::vector<ComplexMatrix> images;
    images.reserve(basis->size());
    for (std::size_t mu = 0; mu < basis->size(); ++mu) {
        images.push_back(sample_ginibre(basis->dim(), rng()));
    }
    return LinearMatrixMap(std::move(basis), std::move(images));
}

// Linear map whose identity image is Hermitian, so the canonical affine
// split has a valid offset.
LinearMatrixMap random_map_hermitian_identity_image(std::shared_ptr<const HermitianBasis> basis,
                                                    std::mt19937_64& rng) {
    std::vector<ComplexMatrix> images;
    images.reserve(basis->size());
    images.push_back(sample_hermitian(basis->dim(), rng()));
    for (std::size_t mu = 1; mu < basis->size(); ++mu) {
        images.push_back(sample_ginibre(basis->dim(), rng()));
    }
    return LinearMatrixMap(std::move(basis), std::move(images));
}

AffineMatrixMap random_affine(std::shared_ptr<const HermitianBasis> basis,
                              std::mt19937_64& rng) {
    const std::size_t dim = basis->dim();
    LinearMatrixMap linear = random_map(std::move(basis), rng);
    return AffineMatrixMap(std::move(linear), sample_hermitian(dim, rng()));
}

InitialAssignment random_assignment(std::size_t n, std::size_t m, std::mt19937_64& rng) {
    std::vector<double> means(m * m - 1);
    for (double& b : means) {
        b = uniform(rng, -0.4, 0.4);
    }
    std::vector<std::vector<double>> corr(n * n - 1, std::vector<double>(m * m - 1));
    bool any_nonzero = false;
    for (auto& row : corr) {
        for (double& c : row) {
            c = uniform(rng, -0.7, 0.7);
            any_nonzero = any_nonzero || c != 0.0;
        }
    }
    if (!any_nonzero) {
        corr[0][0] = 0.5;
    }
    return InitialAssignment::validated(std::move(means), std::move(corr));
}

JointScenario random_scenario(std::size_t n, std::size_t m, std::mt19937_64& rng,
                              const std::string& label) {
    return JointScenario::validated(n, m, sample_hermitian(n * m, rng()), label);
}

CriterionResult basis_gram_condition(const Tolerances& tol) {
    CriterionResult r{"basis-gram-condition", false, 0.0,
                      std::min(1e-10, tol.tol_eq), "N in {2,3,4,5}"};
    for (std::size_t n = 2; n <= 5; ++n) {
        r.measured = std::max(r.measured, HermitianBasis::build(n).gram_residual());
    }
    r.passed = r.measured <= r.threshold;
    return r;
}

CriterionResult expansion_round_trip(std::uint64_t seed) {
    CriterionResult r{"expansion-round-trip", false, 0.0, 1e-12,
                      "100 random matrices per N in {2,3}"};
    std::size_t stream = 0;
    for (std::size_t n : {2, 3}) {
        const HermitianBasis basis = HermitianBasis::build(n);
        for (std::size_t i = 0; i < 100; ++i) {
            const ComplexMatrix q = sample_ginibre(n, derive_seed(seed, stream++));
            r.measured =
                std::max(r.measured, frobenius_distance(reconstruct(expand(q, basis), basis), q));
        }
    }
    r.passed = r.measured <= r.threshold;
    return r;
}

CriterionResult affine_mixture_law(std::uint64_t seed) {
    CriterionResult r{"affine-mixture-law", false, 0.0, 1e-12,
                      "100 random (map, rho, sigma, q) tuples per N in {2,3}"};
    std::mt19937_64 rng(derive_seed(seed, 0x3));
    for (std::size_t n : {2, 3}) {
        auto basis = HermitianBasis::build_shared(n);
        for (std::size_t i = 0; i < 100; ++i) {
            const AffineMatrixMap map = random_affine(basis, rng);
            const ComplexMatrix rho = sample_density_matrix(n, rng()).matrix();
            const ComplexMatrix sigma = sample_density_matrix(n, rng()).matrix();
            const double q = uniform(rng, 0.01, 0.99);

            ComplexMatrix mix = q * rho;
            mix.axpy(1.0 - q, sigma);
            ComplexMatrix expected = q * apply_affine(map, rho);
            expected.axpy(1.0 - q, apply_affine(map, sigma));
            r.measured =
                std::max(r.measured, frobenius_distance(apply_affine(map, mix), expected));
        }
    }
    r.passed = r.measured <= r.threshold;
    return r;
}

CriterionResult affine_linear_equivalence(std::uint64_t seed) {
    CriterionResult r{"affine-linear-equivalence", false, 0.0, 1e-9,
                      "200 random maps per direction, 50 states each; round trip to 1e-12"};
    std::mt19937_64 rng(derive_seed(seed, 0x4));
    double round_trip_worst = 0.0;
    for (std::size_t trial = 0; trial < 200; ++trial) {
        const std::size_t n = (trial % 2 == 0) ? 2 : 3;
        auto basis = HermitianBasis::build_shared(n);
        const std::vector<DensityMatrix> states = sample_states(n, 50, rng());

        const AffineMatrixMap m = random_affine(basis, rng);
        r.measured = std::max(r.measured, equivalence_residual(m, affine_to_linear(m), states));

        const LinearMatrixMap t = random_map_hermitian_identity_image(basis, rng);
        const AffineMatrixMap split = linear_to_affine(t);
        r.measured = std::max(r.measured, equivalence_residual(split, t, states));

        const LinearMatrixMap rebuilt = affine_to_linear(split);
        for (std::size_t mu = 0; mu < basis->size(); ++mu) {
            round_trip_worst =
                std::max(round_trip_worst, frobenius_distance(rebuilt.image(mu), t.image(mu)));
        }
    }
    r.passed = r.measured <= r.threshold && round_trip_worst <= 1e-12;
    r.detail += "; round-trip residual " + sci(round_trip_worst);
    return r;
}

CriterionResult unitary_reduction_cp(const Tolerances& tol, std::uint64_t seed) {
    CriterionResult r{"unitary-reduction-cp-unital", false, 0.0, 1e-9,
                      "100 random (H, t), (N,M) in {(2,2),(2,3),(3,2)}, t in [0,5]"};
    std::mt19937_64 rng(derive_seed(seed, 0x5));
    double unitality_worst = 0.0;
    double choi_worst = 0.0; // most negative eigenvalue, as a deficit
    for (std::size_t trial = 0; trial < 100; ++trial) {
        const auto [n, m] = kJointDims[trial % kJointDims.size()];
        const JointScenario scn = random_scenario(n, m, rng, "cp-check");
        const double t = uniform(rng, 0.0, 5.0);
        const LinearMatrixMap cp = cp_linear_part(scn, t);
        const CpVerdict verdict = is_completely_positive(cp, tol.tol_psd);
        choi_worst = std::max(choi_worst, -verdict.min_eigenvalue);
        unitality_worst = std::max(
            unitality_worst,
            frobenius_distance(cp.image_of_identity(), ComplexMatrix::identity(n)));
    }
    const double unitality_threshold = std::min(1e-10, tol.tol_eq);
    r.measured = choi_worst;
    r.passed = choi_worst <= r.threshold && unitality_worst <= unitality_threshold;
    r.detail += "; worst unitality residual " + sci(unitality_worst);
    return r;
}

CriterionResult traceless_sector_agreement(std::uint64_t seed) {
    CriterionResult r{"traceless-sector-agreement", false, 0.0, 1e-9,
                      "50 random correlated assignments"};
    std::mt19937_64 rng(derive_seed(seed, 0x6));
    for (std::size_t trial = 0; trial < 50; ++trial) {
        const auto [n, m] = kJointDims[trial % kJointDims.size()];
        const JointScenario scn = random_scenario(n, m, rng, "traceless-check");
        const InitialAssignment a = random_assignment(n, m, rng);
        const double t = uniform(rng, 0.0, 5.0);
        const AffineDecomposition dec = affine_decomposition(scn, a, t);
        for (std::size_t alpha = 1; alpha < dec.cp_part.basis().size(); ++alpha) {
            r.measured = std::max(r.measured, frobenius_distance(dec.full_linear.image(alpha),
                                                                 dec.cp_part.image(alpha)));
        }
    }
    r.passed = r.measured <= r.threshold;
    return r;
}

CriterionResult zero_parameter_case(const Tolerances& tol, std::uint64_t seed) {
    CriterionResult r{"zero-parameter-case", false, 0.0, std::min(1e-10, tol.tol_eq),
                      "b = c = 0 sweeps, 51 points over [0,5] per joint dim"};
    std::mt19937_64 rng(derive_seed(seed, 0x7));
    const io::TimeGrid grid{0.0, 5.0, 51};
    const std::vector<double> times = grid.points();
    bool all_cp = true;
    double d_worst = 0.0;
    for (const auto& [n, m] : kJointDims) {
        const JointScenario scn = random_scenario(n, m, rng, "zero-parameter");
        const InitialAssignment zero = InitialAssignment::zero(n, m);
        for (double t : times) {
            const AffineDecomposition dec = affine_decomposition(scn, zero, t, tol);
            r.measured = std::max(r.measured, dec.offset.frobenius_norm());
            const std::vector<double> d = d_parameters(dec);
            for (double v : d) {
                d_worst = std::max(d_worst, std::abs(v));
            }
            const CpVerdict verdict = is_completely_positive(dec.full_linear, tol.tol_psd, tol);
            all_cp = all_cp && verdict.is_cp;
        }
    }
    r.measured = std::max(r.measured, d_worst);
    r.passed = r.measured <= r.threshold && all_cp;
    if (!all_cp) {
        r.detail += "; CP violated at some time";
    }
    return r;
}

CriterionResult non_cp_witness(const Tolerances& tol, std::uint64_t seed) {
    CriterionResult r{"non-cp-witness-demo", false, 0.0, -1e-3,
                      "bundled demo sweep, 101 points over [0,5]"};
    const io::ScenarioFile file = demo::bundled_scenario(false);
    AnalysisOptions options;
    options.seed = seed;
    options.tol = tol;
    const std::vector<double> times = file.times->points();
    const std::vector<MapAnalysisReport> reports =
        time_sweep(file.scenario, file.assignment, times, options);

    double min_full = 0.0;
    double cp_deficit_worst = 0.0;
    for (const MapAnalysisReport& rep : reports) {
        min_full = std::min(min_full, rep.min_choi_eigenvalue);
        cp_deficit_worst = std::max(cp_deficit_worst, -rep.min_choi_cp_part);
    }
    // Witness: the full map must dip at least this far below zero while the
    // CP part stays positive to within tol_psd everywhere.
    r.measured = min_full;
    r.passed = min_full <= r.threshold && cp_deficit_worst <= 1e-9;
    r.detail += "; worst cp-part deficit " + sci(cp_deficit_worst);
    return r;
}

CriterionResult canonical_witnesses(const Tolerances& tol) {
    CriterionResult r{"canonical-choi-witnesses", false, 0.0, 1e-10,
                      "transpose map at N=2; identity spectra at N in {2,3}"};
    {
        auto basis = HermitianBasis::build_shared(2);
        const CpVerdict verdict =
            is_completely_positive(LinearMatrixMap::transpose(basis), tol.tol_psd, tol);
        r.measured = std::max(r.measured, std::abs(verdict.min_eigenvalue + 1.0));
    }
    for (std::size_t n : {2, 3}) {
        auto basis = HermitianBasis::build_shared(n);
        const ChoiMatrix choi = choi_matrix(LinearMatrixMap::identity(basis));
        const EigenDecomposition eig = hermitian_eigendecompose(choi.matrix, tol);
        // ascending: zeros first, then the single eigenvalue N
        for (std::size_t i = 0; i + 1 < eig.eigenvalues.size(); ++i) {
            r.measured = std::max(r.measured, std::abs(eig.eigenvalues[i]));
        }
        r.measured =
            std::max(r.measured, std::abs(eig.eigenvalues.back() - static_cast<double>(n)));
    }
    r.passed = r.measured <= r.threshold;
    return r;
}

CriterionResult zero_time_identity(std::uint64_t seed) {
    CriterionResult r{"zero-time-identity", false, 0.0, 1e-10,
                      "20 random scenarios and assignments at t = 0"};
    std::mt19937_64 rng(derive_seed(seed, 0x8));
    double offset_worst = 0.0;
    for (std::size_t trial = 0; trial < 20; ++trial) {
        const auto [n, m] = kJointDims[trial % kJointDims.size()];
        const JointScenario scn = random_scenario(n, m, rng, "t0-check");
        const InitialAssignment a = random_assignment(n, m, rng);
        const AffineDecomposition dec = affine_decomposition(scn, a, 0.0);
        for (std::size_t mu = 0; mu < dec.cp_part.basis().size(); ++mu) {
            r.measured = std::max(r.measured, frobenius_distance(dec.full_linear.image(mu),
                                                                 dec.cp_part.basis().element(mu)));
        }
        offset_worst = std::max(offset_worst, dec.offset.frobenius_norm());
    }
    r.passed = r.measured <= r.threshold && offset_worst <= 1e-12;
    r.detail += "; worst offset norm " + sci(offset_worst);
    return r;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const Tolerances& tol, std::uint64_t seed) {
    std::vector<CriterionResult> results;
    results.push_back(basis_gram_condition(tol));
    results.push_back(expansion_round_trip(seed));
    results.push_back(affine_mixture_law(seed));
    results.push_back(affine_linear_equivalence(seed));
    results.push_back(unitary_reduction_cp(tol, seed));
    results.push_back(traceless_sector_agreement(seed));
    results.push_back(zero_parameter_case(tol, seed));
    results.push_back(non_cp_witness(tol, seed));
    results.push_back(canonical_witnesses(tol));
    results.push_back(zero_time_identity(seed));
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.passed; });
}

void print_results(std::ostream& out, const std::vector<CriterionResult>& results) {
    std::size_t index = 1;
    for (const CriterionResult& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << index++ << ". " << r.name << "  measured "
            << r.measured << "  threshold " << r.threshold << "  (" << r.detail << ")\n";
    }
    out << (all_passed(results) ? "acceptance: all criteria passed\n"
                                : "acceptance: FAILURES present\n");
}

} // namespace dynamap::selftest
