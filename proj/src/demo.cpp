#include "dynamap/demo.hpp"

#include <cmath>

namespace dynamap::demo {

namespace {

// sigma_z (x) 1, 1 (x) sigma_z, and the three exchange couplings, assembled
// entrywise at dim 4. Row index is 2*i_sys + i_env.
ComplexMatrix demo_hamiltonian() {
    const double local_sys = 0.55;
    const double local_env = 0.90;
    const double jx = 1.10;
    const double jy = 0.80;
    const double jz = 0.50;

    ComplexMatrix pauli_x(2);
    pauli_x(0, 1) = 1.0;
    pauli_x(1, 0) = 1.0;
    ComplexMatrix pauli_y(2);
    pauli_y(0, 1) = cplx{0.0, -1.0};
    pauli_y(1, 0) = cplx{0.0, 1.0};
    ComplexMatrix pauli_z(2);
    pauli_z(0, 0) = 1.0;
    pauli_z(1, 1) = -1.0;
    const ComplexMatrix one = ComplexMatrix::identity(2);

    ComplexMatrix h = kron(pauli_z, one) * cplx{local_sys, 0.0};
    h.axpy(local_env, kron(one, pauli_z));
    h.axpy(jx, kron(pauli_x, pauli_x));
    h.axpy(jy, kron(pauli_y, pauli_y));
    h.axpy(jz, kron(pauli_z, pauli_z));
    return h;
}

} // namespace

io::ScenarioFile bundled_scenario(bool zero_correlations) {
    JointScenario scenario = JointScenario::validated(2, 2, demo_hamiltonian(),
                                                      zero_correlations
                                                          ? "two-qubit-demo-product"
                                                          : "two-qubit-demo-correlated");
    InitialAssignment assignment = InitialAssignment::zero(2, 2);
    if (!zero_correlations) {
        // Frozen output of the offline search: physical at the maximally
        // mixed state, clearly non-CP full map inside t in [0, 5].
        std::vector<double> env_means = {0.00, 0.00, 0.20};
        std::vector<std::vector<double>> correlations = {
            {0.55, 0.00, 0.00},
            {0.00, -0.40, 0.00},
            {0.00, 0.00, 0.35},
        };
        assignment = InitialAssignment::validated(std::move(env_means), std::move(correlations));
    }
    return io::ScenarioFile{std::move(scenario), std::move(assignment),
                            io::TimeGrid::validated(0.0, 5.0, 101)};
}

DemoSummary summarize(const std::vector<MapAnalysisReport>& reports) {
    DemoSummary summary;
    bool first = true;
    for (const MapAnalysisReport& r : reports) {
        if (first || r.min_choi_eigenvalue < summary.witness_min_choi) {
            summary.witness_time = r.time;
            summary.witness_min_choi = r.min_choi_eigenvalue;
            first = false;
        }
        summary.max_cp_part_deficit =
            std::max(summary.max_cp_part_deficit, std::max(0.0, -r.min_choi_cp_part));
        for (double d : r.d_parameters) {
            summary.max_abs_d = std::max(summary.max_abs_d, std::abs(d));
        }
    }
    summary.violation_found = summary.witness_min_choi <= -1e-3;
    return summary;
}

} // namespace dynamap::demo
