#pragma once

#include "dynamap/analysis.hpp"
#include "dynamap/io.hpp"

namespace dynamap::demo {

/// The bundled two-qubit demo: an anisotropic exchange Hamiltonian with
/// distinct local terms, and correlation parameters chosen (by an offline
/// parameter search) so that the assignment is physical at the maximally
/// mixed state while the induced full linear map loses complete positivity
/// somewhere on the bundled time grid. With zero_correlations the assignment
/// collapses to the product case and the map stays CP.
io::ScenarioFile bundled_scenario(bool zero_correlations = false);

struct DemoSummary {
    bool violation_found = false;
    double witness_time = 0.0;       // time of the most negative full-map Choi eigenvalue
    double witness_min_choi = 0.0;   // that eigenvalue
    double max_cp_part_deficit = 0.0; // max over t of max(0, -min_choi_cp_part)
    double max_abs_d = 0.0;
};

DemoSummary summarize(const std::vector<MapAnalysisReport>& reports);

} // namespace dynamap::demo
