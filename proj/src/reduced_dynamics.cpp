#include "dynamap/reduced_dynamics.hpp"

#include "dynamap/errors.hpp"
#include "dynamap/detail/format.hpp"


#include <cmath>
#include <utility>

namespace dynamap {

JointScenario JointScenario::validated(std::size_t system_dim, std::size_t env_dim,
                                       ComplexMatrix hamiltonian, std::string label,
                                       const Tolerances& tol) {
    if (system_dim == 0 || env_dim == 0) {
        throw InvalidArgument("JointScenario: dimensions must be positive");
    }
    if (hamiltonian.dim() != system_dim * env_dim) {
        throw DimensionMismatch("JointScenario: Hamiltonian dimension " +
                                std::to_string(hamiltonian.dim()) + " is not " +
                                std::to_string(system_dim) + "*" + std::to_string(env_dim));
    }
    if (!hamiltonian.is_finite()) {
        throw InvalidArgument("JointScenario: Hamiltonian has non-finite entries");
    }
    const double residual = hamiltonian.hermiticity_residual();
    if (!(residual <= tol.tol_herm)) {
        throw NotHermitian("JointScenario: Hamiltonian Hermiticity residual " +
                           detail::format_residual(residual));
    }
    return JointScenario{system_dim, env_dim, std::move(hamiltonian), std::move(label)};
}

InitialAssignment InitialAssignment::zero(std::size_t system_dim, std::size_t env_dim) {
    std::vector<double> means(env_dim * env_dim - 1, 0.0);
    std::vector<std::vector<double>> corr(system_dim * system_dim - 1,
                                          std::vector<double>(env_dim * env_dim - 1, 0.0));
    return InitialAssignment(std::move(means), std::move(corr));
}

InitialAssignment InitialAssignment::validated(std::vector<double> env_means,
                                               std::vector<std::vector<double>> correlations) {
    for (double b : env_means) {
        if (!std::isfinite(b)) {
            throw InvalidArgument("InitialAssignment: non-finite env mean");
        }
    }
    for (const auto& row : correlations) {
        if (row.size() != env_means.size()) {
            throw DimensionMismatch("InitialAssignment: correlation row length " +
                                    std::to_string(row.size()) + " does not match env_means length " +
                                    std::to_string(env_means.size()));
        }
        for (double c : row) {
            if (!std::isfinite(c)) {
                throw InvalidArgument("InitialAssignment: non-finite correlation");
            }
        }
    }
    return InitialAssignment(std::move(env_means), std::move(correlations));
}

bool InitialAssignment::is_zero() const {
    for (double b : env_means_) {
        if (b != 0.0) {
            return false;
        }
    }
    for (const auto& row : correlations_) {
        for (double c : row) {
            if (c != 0.0) {
                return false;
            }
        }
    }
    return true;
}

namespace {

void require_assignment_shape(const InitialAssignment& a, const JointScenario& scn) {
    if (a.sys_param_count() != scn.system_dim * scn.system_dim - 1 ||
        a.env_param_count() != scn.env_dim * scn.env_dim - 1) {
        throw DimensionMismatch("assignment parameters shaped (" +
                                std::to_string(a.sys_param_count()) + ", " +
                                std::to_string(a.env_param_count()) + ") do not fit dims (" +
                                std::to_string(scn.system_dim) + ", " +
                                std::to_string(scn.env_dim) + ")");
    }
}

// sum_b env_means[b] 1 (x) G_b + sum_{a,b} correlations[a][b] F_a (x) G_b
ComplexMatrix correlation_operator(const InitialAssignment& a, const JointScenario& scn,
                                   const HermitianBasis& sys_basis,
                                   const HermitianBasis& env_basis) {
    ComplexMatrix op(scn.joint_dim());
    const ComplexMatrix sys_identity = ComplexMatrix::identity(scn.system_dim);
    for (std::size_t beta = 0; beta < a.env_param_count(); ++beta) {
        if (a.env_means()[beta] != 0.0) {
            op.axpy(a.env_means()[beta], kron(sys_identity, env_basis.element(beta + 1)));
        }
    }
    for (std::size_t alpha = 0; alpha < a.sys_param_count(); ++alpha) {
        for (std::size_t beta = 0; beta < a.env_param_count(); ++beta) {
            const double c = a.correlations()[alpha][beta];
            if (c != 0.0) {
                op.axpy(c, kron(sys_basis.element(alpha + 1), env_basis.element(beta + 1)));
            }
        }
    }
    return op;
}

ComplexMatrix extend(const InitialAssignment& a, const JointScenario& scn,
                     const ComplexMatrix& q, const ComplexMatrix& correlation_op) {
    const double inv_m = 1.0 / static_cast<double>(scn.env_dim);
    ComplexMatrix joint = kron(q, ComplexMatrix::identity(scn.env_dim));
    const cplx weight = q.trace() / static_cast<double>(scn.system_dim);
    joint.axpy(weight, correlation_op);
    joint *= inv_m;
    return joint;
}

LinearMatrixMap reduced_map_from_joint_images(
    const JointScenario& scn, const UnitaryPropagator& u,
    std::shared_ptr<const HermitianBasis> sys_basis,
    const std::vector<ComplexMatrix>& joint_inputs) {
    std::vector<ComplexMatrix> images;
    images.reserve(joint_inputs.size());
    for (const ComplexMatrix& joint : joint_inputs) {
        images.push_back(
            partial_trace_env(unitary_conjugate(u.matrix, joint), scn.system_dim, scn.env_dim));
    }
    return LinearMatrixMap(std::move(sys_basis), std::move(images));
}

LinearMatrixMap cp_linear_part_with(const JointScenario& scn, const UnitaryPropagator& u,
                                    std::shared_ptr<const HermitianBasis> sys_basis) {
    const double inv_m = 1.0 / static_cast<double>(scn.env_dim);
    const ComplexMatrix env_identity = ComplexMatrix::identity(scn.env_dim);
    std::vector<ComplexMatrix> joint_inputs;
    joint_inputs.reserve(sys_basis->size());
    for (const ComplexMatrix& f : sys_basis->elements()) {
        joint_inputs.push_back(inv_m * kron(f, env_identity));
    }
    return reduced_map_from_joint_images(scn, u, std::move(sys_basis), joint_inputs);
}

LinearMatrixMap full_linear_map_with(const JointScenario& scn, const InitialAssignment& a,
                                     const UnitaryPropagator& u,
                                     std::shared_ptr<const HermitianBasis> sys_basis) {
    const HermitianBasis env_basis = HermitianBasis::build(scn.env_dim);
    const ComplexMatrix corr = correlation_operator(a, scn, *sys_basis, env_basis);
    std::vector<ComplexMatrix> joint_inputs;
    joint_inputs.reserve(sys_basis->size());
    for (const ComplexMatrix& f : sys_basis->elements()) {
        joint_inputs.push_back(extend(a, scn, f, corr));
    }
    return reduced_map_from_joint_images(scn, u, std::move(sys_basis), joint_inputs);
}

} // namespace

ComplexMatrix assignment_extend(const InitialAssignment& a, const JointScenario& scn,
                                const ComplexMatrix& q) {
    require_assignment_shape(a, scn);
    if (q.dim() != scn.system_dim) {
        throw DimensionMismatch("assignment_extend: input dim " + std::to_string(q.dim()) +
                                " does not match system dim " + std::to_string(scn.system_dim));
    }
    const HermitianBasis sys_basis = HermitianBasis::build(scn.system_dim);
    const HermitianBasis env_basis = HermitianBasis::build(scn.env_dim);
    return extend(a, scn, q, correlation_operator(a, scn, sys_basis, env_basis));
}

PhysicalityVerdict assignment_is_physical(const InitialAssignment& a, const JointScenario& scn,
                                          const DensityMatrix& rho, const Tolerances& tol) {
    const ComplexMatrix joint = assignment_extend(a, scn, rho.matrix());
    const double lambda_min = min_eigenvalue(joint, tol);
    return PhysicalityVerdict{lambda_min >= -tol.tol_psd, lambda_min};
}

LinearMatrixMap cp_linear_part(const JointScenario& scn, double t, const Tolerances& tol) {
    const UnitaryPropagator u = propagator(scn.hamiltonian, t, tol);
    return cp_linear_part_with(scn, u, HermitianBasis::build_shared(scn.system_dim));
}

LinearMatrixMap full_linear_map(const JointScenario& scn, const InitialAssignment& a, double t,
                                const Tolerances& tol) {
    require_assignment_shape(a, scn);
    const UnitaryPropagator u = propagator(scn.hamiltonian, t, tol);
    return full_linear_map_with(scn, a, u, HermitianBasis::build_shared(scn.system_dim));
}

AffineDecomposition affine_decomposition(const JointScenario& scn, const InitialAssignment& a,
                                         double t, const Tolerances& tol) {
    require_assignment_shape(a, scn);
    const UnitaryPropagator u = propagator(scn.hamiltonian, t, tol);
    auto sys_basis = HermitianBasis::build_shared(scn.system_dim);

    LinearMatrixMap cp = cp_linear_part_with(scn, u, sys_basis);
    LinearMatrixMap full = full_linear_map_with(scn, a, u, sys_basis);

    // K = (1' - 1)/N, computed from the evolved identity image so the affine
    // pair and the full map share one code path.
    ComplexMatrix offset = full.image_of_identity();
    offset -= ComplexMatrix::identity(scn.system_dim);
    offset *= 1.0 / static_cast<double>(scn.system_dim);
    // The evolved offset is Hermitian up to rounding; discard the dust so the
    // affine invariant holds exactly.
    ComplexMatrix herm(offset.dim());
    for (std::size_t i = 0; i < offset.dim(); ++i) {
        for (std::size_t j = 0; j < offset.dim(); ++j) {
            herm(i, j) = 0.5 * (offset(i, j) + std::conj(offset(j, i)));
        }
    }
    return AffineDecomposition{std::move(cp), std::move(herm), std::move(full)};
}

std::vector<double> d_parameters(const AffineDecomposition& dec) {
    const HermitianBasis& basis = dec.cp_part.basis();
    std::vector<double> d;
    d.reserve(basis.size() - 1);
    for (std::size_t alpha = 1; alpha < basis.size(); ++alpha) {
        d.push_back(hs_inner(basis.element(alpha), dec.offset).real());
    }
    return d;
}

} // namespace dynamap
