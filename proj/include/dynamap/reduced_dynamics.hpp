#pragma once

#include "dynamap/complex_matrix.hpp"
#include "dynamap/matrix_core.hpp"
#include "dynamap/matrix_maps.hpp"
#include "dynamap/tolerances.hpp"

#include <string>
#include <vector>

namespace dynamap {

/// A system of dimension N coupled to an environment of dimension M through
/// a joint Hamiltonian of dimension N*M (system factor on the left).
struct JointScenario {
    std::size_t system_dim = 0;
    std::size_t env_dim = 0;
    ComplexMatrix hamiltonian;
    std::string label;

    std::size_t joint_dim() const { return system_dim * env_dim; }

    static JointScenario validated(std::size_t system_dim, std::size_t env_dim,
                                   ComplexMatrix hamiltonian, std::string label,
                                   const Tolerances& tol = {});
};

/// Parameters of the correlated initial-state assignment
///
///   A(Q) = (1/M) [ Q (x) 1_M
///                  + (Tr Q / N) ( sum_b env_means[b] 1_N (x) G_b
///                                 + sum_{a,b} correlations[a][b] F_a (x) G_b ) ]
///
/// with {F_a} and {G_b} the traceless system and environment basis elements.
/// The mean/correlation terms attach to the trace component only, so
/// Tr_env(A(Q)) = Q for every Q, and traceless inputs extend as
/// F_a (x) 1_M / M regardless of the parameters. Zero parameters give the
/// product assignment Q (x) 1_M / M.
class InitialAssignment {
public:
    /// All-zero parameters (the product assignment).
    static InitialAssignment zero(std::size_t system_dim, std::size_t env_dim);
    static InitialAssignment validated(std::vector<double> env_means,
                                       std::vector<std::vector<double>> correlations);

    std::size_t env_param_count() const { return env_means_.size(); }    // M^2 - 1
    std::size_t sys_param_count() const { return correlations_.size(); } // N^2 - 1
    const std::vector<double>& env_means() const { return env_means_; }
    const std::vector<std::vector<double>>& correlations() const { return correlations_; }
    bool is_zero() const;

private:
    InitialAssignment(std::vector<double> env_means,
                      std::vector<std::vector<double>> correlations)
        : env_means_(std::move(env_means)), correlations_(std::move(correlations)) {}

    std::vector<double> env_means_;
    std::vector<std::vector<double>> correlations_;
};

/// The induced subsystem dynamics at one time, in both presentations:
/// the full linear map, and the equivalent affine pair whose linear part is
/// the completely positive unital map of the product construction.
struct AffineDecomposition {
    LinearMatrixMap cp_part;
    ComplexMatrix offset;
    LinearMatrixMap full_linear;

    AffineMatrixMap affine() const { return AffineMatrixMap(cp_part, offset); }
};

/// Extends Q to the joint space under the assignment; linear in Q.
ComplexMatrix assignment_extend(const InitialAssignment& a, const JointScenario& scn,
                                const ComplexMatrix& q);

struct PhysicalityVerdict {
    bool physical = false;
    double min_eigenvalue = 0.0;
};

/// Whether A(rho) is a genuine joint state (positive semidefinite; Hermiticity
/// and unit trace hold by construction).
PhysicalityVerdict assignment_is_physical(const InitialAssignment& a, const JointScenario& scn,
                                          const DensityMatrix& rho, const Tolerances& tol = {});

/// The unital completely positive map
/// rho -> (1/M) Tr_env[ U (rho (x) 1_M) U† ], U = e^{-iHt}.
LinearMatrixMap cp_linear_part(const JointScenario& scn, double t, const Tolerances& tol = {});

/// The linear map induced by evolving the assignment:
/// F_mu -> Tr_env[ U A(F_mu) U† ]. Generally not completely positive for
/// nonzero assignment parameters.
LinearMatrixMap full_linear_map(const JointScenario& scn, const InitialAssignment& a, double t,
                                const Tolerances& tol = {});

/// Both maps plus the offset K = (full(1) - 1)/N that makes
/// (cp_part, K) agree with full_linear on all unit-trace inputs.
AffineDecomposition affine_decomposition(const JointScenario& scn, const InitialAssignment& a,
                                         double t, const Tolerances& tol = {});

/// d_alpha = Tr[F_alpha K] for alpha >= 1; all zero exactly when the offset
/// vanishes for trace-preserving dynamics.
std::vector<double> d_parameters(const AffineDecomposition& dec);

} // namespace dynamap
