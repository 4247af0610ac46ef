#pragma once

#include "dynamap/analysis.hpp"
#include "dynamap/matrix_maps.hpp"
#include "dynamap/operator_basis.hpp"
#include "dynamap/reduced_dynamics.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dynamap::io {

using json = nlohmann::json;

/// Inclusive linspace with `steps` points; steps = 1 yields {start}.
struct TimeGrid {
    double start = 0.0;
    double stop = 0.0;
    std::size_t steps = 1;

    std::vector<double> points() const;
    static TimeGrid validated(double start, double stop, std::size_t steps);
};

/// A scenario file: the joint system, its assignment parameters, and an
/// optional default time grid.
struct ScenarioFile {
    JointScenario scenario;
    InitialAssignment assignment;
    std::optional<TimeGrid> times;
};

// Complex scalars serialize as [re, im]; matrices as flat row-major arrays
// of such pairs, with the dimension carried by context.
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j, std::size_t expected_dim, const std::string& field);

json scenario_to_json(const ScenarioFile& file);
ScenarioFile scenario_from_json(const json& j, const Tolerances& tol = {});
ScenarioFile load_scenario(const std::string& path, const Tolerances& tol = {});
void save_scenario(const ScenarioFile& file, const std::string& path);

json basis_to_json(const HermitianBasis& basis);

json map_to_json(const LinearMatrixMap& map);
json map_to_json(const AffineMatrixMap& map);
/// Reads either kind; affine documents carry an "offset" field.
std::variant<LinearMatrixMap, AffineMatrixMap> map_from_json(const json& j,
                                                             const Tolerances& tol = {});

json report_to_json(const MapAnalysisReport& report);
json reports_to_json(const std::vector<MapAnalysisReport>& reports);

/// Columns: t, min_choi_full, is_cp_full, min_choi_cp_part, trace_residual,
/// equivalence_residual, d_1..d_{N^2-1}. Reals print with 17 significant
/// digits.
void reports_to_csv(const std::vector<MapAnalysisReport>& reports, std::ostream& out);

} // namespace dynamap::io
