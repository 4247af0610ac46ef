#pragma once

#include "dynamap/matrix_core.hpp"
#include "dynamap/matrix_maps.hpp"
#include "dynamap/reduced_dynamics.hpp"
#include "dynamap/tolerances.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dynamap {

/// Choi matrix J = sum_{ij} E_ij (x) T(E_ij), unnormalized (Tr J = N for
/// trace-preserving T). Positive semidefinite iff T is completely positive.
struct ChoiMatrix {
    ComplexMatrix matrix;
    std::size_t source_dim = 0;
};

ChoiMatrix choi_matrix(const LinearMatrixMap& map);

struct CpVerdict {
    bool is_cp = false;
    double min_eigenvalue = 0.0;
};

/// CP verdict via the minimum Choi eigenvalue. Throws NonHermitianChoi when
/// the map is not Hermiticity-preserving.
CpVerdict is_completely_positive(const LinearMatrixMap& map, double tol,
                                 const Tolerances& tolerances = {});

/// max_mu |Tr[image(F_mu)] - Tr[F_mu]|
double check_trace_preserving(const LinearMatrixMap& map);

/// max_mu ‖image(F_mu) - image(F_mu)†‖_F
double hermiticity_preservation_residual(const LinearMatrixMap& map);

struct AffinePhysicalityReport {
    double trace_residual = 0.0;
    double min_output_eigenvalue = 0.0;
};

AffinePhysicalityReport check_affine_physicality(const AffineMatrixMap& map,
                                                 std::span<const DensityMatrix> samples,
                                                 const Tolerances& tol = {});

/// max over samples of ‖apply_affine(m, rho) - apply_linear(t, rho)‖_F
double equivalence_residual(const AffineMatrixMap& m, const LinearMatrixMap& t,
                            std::span<const DensityMatrix> samples);

/// Everything the sweep records about one scenario at one time: the full
/// induced map and the CP part of its affine equivalent, side by side.
struct MapAnalysisReport {
    std::string label;
    double time = 0.0;
    double min_choi_eigenvalue = 0.0; // full linear map
    bool is_cp = false;               // full linear map
    double min_choi_cp_part = 0.0;
    bool is_cp_cp_part = false;
    double trace_residual = 0.0;
    double hermiticity_residual = 0.0;
    double min_output_eigenvalue_over_samples = 0.0;
    double equivalence_residual = 0.0;
    std::vector<double> d_parameters;
};

struct AnalysisOptions {
    std::size_t sample_count = 50;
    std::uint64_t seed = 42;
    Tolerances tol{};
};

/// Deterministic density-matrix samples for state-based checks.
std::vector<DensityMatrix> sample_states(std::size_t dim, std::size_t count, std::uint64_t seed);

MapAnalysisReport analyze_at(const JointScenario& scn, const InitialAssignment& a, double t,
                             const AnalysisOptions& options = {});

/// One report per time point, ordered by t.
std::vector<MapAnalysisReport> time_sweep(const JointScenario& scn, const InitialAssignment& a,
                                          std::span<const double> times,
                                          const AnalysisOptions& options = {});

} // namespace dynamap
