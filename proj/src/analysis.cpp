#include "dynamap/analysis.hpp"

#include "dynamap/errors.hpp"
#include "dynamap/detail/format.hpp"


#include <algorithm>
#include <cmath>
#include <limits>

namespace dynamap {

ChoiMatrix choi_matrix(const LinearMatrixMap& map) {
    const std::size_t n = map.dim();
    ChoiMatrix choi{ComplexMatrix(n * n), n};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            ComplexMatrix unit(n);
            unit(i, j) = 1.0;
            const ComplexMatrix image = apply_linear(map, unit);
            // block (i, j) of J is T(E_ij)
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b) {
                    choi.matrix(i * n + a, j * n + b) = image(a, b);
                }
            }
        }
    }
    return choi;
}

CpVerdict is_completely_positive(const LinearMatrixMap& map, double tol,
                                 const Tolerances& tolerances) {
    const ChoiMatrix choi = choi_matrix(map);
    const double herm = choi.matrix.hermiticity_residual();
    if (!(herm <= tolerances.tol_herm)) {
        throw NonHermitianChoi("Choi Hermiticity residual " + detail::format_residual(herm) +
                               "; the map is not Hermiticity-preserving");
    }
    const double lambda_min = min_eigenvalue(choi.matrix, tolerances);
    return CpVerdict{lambda_min >= -tol, lambda_min};
}

double check_trace_preserving(const LinearMatrixMap& map) {
    double worst = 0.0;
    for (std::size_t mu = 0; mu < map.basis().size(); ++mu) {
        const cplx expected = map.basis().element(mu).trace();
        worst = std::max(worst, std::abs(map.image(mu).trace() - expected));
    }
    return worst;
}

double hermiticity_preservation_residual(const LinearMatrixMap& map) {
    double worst = 0.0;
    for (const ComplexMatrix& im : map.images()) {
        worst = std::max(worst, im.hermiticity_residual());
    }
    return worst;
}

AffinePhysicalityReport check_affine_physicality(const AffineMatrixMap& map,
                                                 std::span<const DensityMatrix> samples,
                                                 const Tolerances& tol) {
    AffinePhysicalityReport report;
    report.min_output_eigenvalue = std::numeric_limits<double>::infinity();
    for (const DensityMatrix& rho : samples) {
        const ComplexMatrix out = apply_affine(map, rho.matrix());
        report.trace_residual =
            std::max(report.trace_residual, std::abs(out.trace() - cplx{1.0, 0.0}));
        // Outputs of physical maps are Hermitian up to rounding; analyze the
        // Hermitian part so the eigensolver's precondition holds either way.
        ComplexMatrix herm(out.dim());
        for (std::size_t i = 0; i < out.dim(); ++i) {
            for (std::size_t j = 0; j < out.dim(); ++j) {
                herm(i, j) = 0.5 * (out(i, j) + std::conj(out(j, i)));
            }
        }
        report.min_output_eigenvalue =
            std::min(report.min_output_eigenvalue, min_eigenvalue(herm, tol));
    }
    return report;
}

double equivalence_residual(const AffineMatrixMap& m, const LinearMatrixMap& t,
                            std::span<const DensityMatrix> samples) {
    if (m.dim() != t.dim()) {
        throw DimensionMismatch("equivalence_residual: map dimensions do not agree");
    }
    double worst = 0.0;
    for (const DensityMatrix& rho : samples) {
        worst = std::max(worst, frobenius_distance(apply_affine(m, rho.matrix()),
                                                   apply_linear(t, rho.matrix())));
    }
    return worst;
}

std::vector<DensityMatrix> sample_states(std::size_t dim, std::size_t count,
                                         std::uint64_t seed) {
    std::vector<DensityMatrix> states;
    states.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        states.push_back(sample_density_matrix(dim, derive_seed(seed, i)));
    }
    return states;
}

namespace {

MapAnalysisReport analyze_decomposition(const JointScenario& scn, const AffineDecomposition& dec,
                                        double t, std::span<const DensityMatrix> samples,
                                        const AnalysisOptions& options) {
    MapAnalysisReport report;
    report.label = scn.label;
    report.time = t;

    const CpVerdict full = is_completely_positive(dec.full_linear, options.tol.tol_psd, options.tol);
    report.min_choi_eigenvalue = full.min_eigenvalue;
    report.is_cp = full.is_cp;

    const CpVerdict cp = is_completely_positive(dec.cp_part, options.tol.tol_psd, options.tol);
    report.min_choi_cp_part = cp.min_eigenvalue;
    report.is_cp_cp_part = cp.is_cp;

    report.trace_residual = check_trace_preserving(dec.full_linear);
    report.hermiticity_residual = hermiticity_preservation_residual(dec.full_linear);

    const AffineMatrixMap affine = dec.affine();
    report.equivalence_residual = equivalence_residual(affine, dec.full_linear, samples);

    double min_out = std::numeric_limits<double>::infinity();
    for (const DensityMatrix& rho : samples) {
        const ComplexMatrix out = apply_linear(dec.full_linear, rho.matrix());
        ComplexMatrix herm(out.dim());
        for (std::size_t i = 0; i < out.dim(); ++i) {
            for (std::size_t j = 0; j < out.dim(); ++j) {
                herm(i, j) = 0.5 * (out(i, j) + std::conj(out(j, i)));
            }
        }
        min_out = std::min(min_out, min_eigenvalue(herm, options.tol));
    }
    report.min_output_eigenvalue_over_samples = min_out;
    report.d_parameters = d_parameters(dec);
    return report;
}

} // namespace

MapAnalysisReport analyze_at(const JointScenario& scn, const InitialAssignment& a, double t,
                             const AnalysisOptions& options) {
    const std::vector<DensityMatrix> samples =
        sample_states(scn.system_dim, options.sample_count, options.seed);
    const AffineDecomposition dec = affine_decomposition(scn, a, t, options.tol);
    return analyze_decomposition(scn, dec, t, samples, options);
}

std::vector<MapAnalysisReport> time_sweep(const JointScenario& scn, const InitialAssignment& a,
                                          std::span<const double> times,
                                          const AnalysisOptions& options) {
    for (double t : times) {
        if (!std::isfinite(t)) {
            throw InvalidArgument("time_sweep: non-finite time value");
        }
    }
    std::vector<double> ordered(times.begin(), times.end());
    std::sort(ordered.begin(), ordered.end());

    const std::vector<DensityMatrix> samples =
        sample_states(scn.system_dim, options.sample_count, options.seed);

    std::vector<MapAnalysisReport> reports;
    reports.reserve(ordered.size());
    for (double t : ordered) {
        const AffineDecomposition dec = affine_decomposition(scn, a, t, options.tol);
        reports.push_back(analyze_decomposition(scn, dec, t, samples, options));
    }
    return reports;
}

} // namespace dynamap
