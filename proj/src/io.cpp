#include "dynamap/io.hpp"

#include "dynamap/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace dynamap::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw ParseError(field + ": " + what);
}

double real_from_json(const json& j, const std::string& field) {
    if (!j.is_number()) {
        fail(field, "expected a number");
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        fail(field, "expected a finite number");
    }
    return v;
}

cplx complex_from_json(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2) {
        fail(field, "expected a [re, im] pair");
    }
    return {real_from_json(j[0], field + "[0]"), real_from_json(j[1], field + "[1]")};
}

std::string csv_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::vector<double> TimeGrid::points() const {
    std::vector<double> out;
    out.reserve(steps);
    if (steps == 1) {
        out.push_back(start);
        return out;
    }
    const double step = (stop - start) / static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) {
        out.push_back(start + step * static_cast<double>(i));
    }
    out.back() = stop; // pin the endpoint against accumulation drift
    return out;
}

TimeGrid TimeGrid::validated(double start, double stop, std::size_t steps) {
    if (!std::isfinite(start) || !std::isfinite(stop)) {
        throw InvalidArgument("time grid: bounds must be finite");
    }
    if (steps < 1) {
        throw InvalidArgument("time grid: steps must be >= 1");
    }
    if (stop < start) {
        throw InvalidArgument("time grid: stop must be >= start");
    }
    return TimeGrid{start, stop, steps};
}

json matrix_to_json(const ComplexMatrix& m) {
    json out = json::array();
    for (const cplx& v : m.flat()) {
        out.push_back(json::array({v.real(), v.imag()}));
    }
    return out;
}

ComplexMatrix matrix_from_json(const json& j, std::size_t expected_dim,
                               const std::string& field) {
    if (!j.is_array()) {
        fail(field, "expected an array of [re, im] pairs");
    }
    if (j.size() != expected_dim * expected_dim) {
        fail(field, "expected " + std::to_string(expected_dim * expected_dim) +
                        " entries (row-major " + std::to_string(expected_dim) + "x" +
                        std::to_string(expected_dim) + "), got " + std::to_string(j.size()));
    }
    ComplexMatrix m(expected_dim);
    std::size_t idx = 0;
    for (cplx& v : m.flat()) {
        v = complex_from_json(j[idx], field + "[" + std::to_string(idx) + "]");
        ++idx;
    }
    return m;
}

json scenario_to_json(const ScenarioFile& file) {
    json j;
    j["label"] = file.scenario.label;
    j["system_dim"] = file.scenario.system_dim;
    j["env_dim"] = file.scenario.env_dim;
    j["hamiltonian"] = matrix_to_json(file.scenario.hamiltonian);
    j["assignment"] = {
        {"env_means", file.assignment.env_means()},
        {"correlations", file.assignment.correlations()},
    };
    if (file.times) {
        j["times"] = {{"start", file.times->start},
                      {"stop", file.times->stop},
                      {"steps", file.times->steps}};
    }
    return j;
}

ScenarioFile scenario_from_json(const json& j, const Tolerances& tol) {
    if (!j.is_object()) {
        fail("scenario", "expected a JSON object");
    }
    for (const char* key : {"system_dim", "env_dim", "hamiltonian", "assignment"}) {
        if (!j.contains(key)) {
            fail(key, "missing required field");
        }
    }
    if (!j["system_dim"].is_number_unsigned() || !j["env_dim"].is_number_unsigned()) {
        fail("system_dim/env_dim", "expected positive integers");
    }
    const auto n = j["system_dim"].get<std::size_t>();
    const auto m = j["env_dim"].get<std::size_t>();
    if (n == 0 || m == 0) {
        fail("system_dim/env_dim", "expected positive integers");
    }
    const std::string label = j.value("label", std::string("scenario"));

    ComplexMatrix h = matrix_from_json(j["hamiltonian"], n * m, "hamiltonian");
    JointScenario scenario = [&] {
        try {
            return JointScenario::validated(n, m, std::move(h), label, tol);
        } catch (const Error& e) {
            fail("hamiltonian", e.what());
        }
    }();

    const json& ja = j["assignment"];
    if (!ja.is_object() || !ja.contains("env_means") || !ja.contains("correlations")) {
        fail("assignment", "expected an object with env_means and correlations");
    }
    std::vector<double> means;
    for (std::size_t i = 0; i < ja["env_means"].size(); ++i) {
        means.push_back(real_from_json(ja["env_means"][i],
                                       "assignment.env_means[" + std::to_string(i) + "]"));
    }
    std::vector<std::vector<double>> corr;
    if (!ja["correlations"].is_array()) {
        fail("assignment.correlations", "expected an array of rows");
    }
    for (std::size_t r = 0; r < ja["correlations"].size(); ++r) {
        const json& row = ja["correlations"][r];
        if (!row.is_array()) {
            fail("assignment.correlations[" + std::to_string(r) + "]", "expected an array");
        }
        std::vector<double> vals;
        for (std::size_t cidx = 0; cidx < row.size(); ++cidx) {
            vals.push_back(real_from_json(row[cidx], "assignment.correlations[" +
                                                         std::to_string(r) + "][" +
                                                         std::to_string(cidx) + "]"));
        }
        corr.push_back(std::move(vals));
    }
    if (means.size() != m * m - 1 || corr.size() != n * n - 1) {
        fail("assignment", "env_means must have M^2-1 entries and correlations N^2-1 rows");
    }
    InitialAssignment assignment = [&] {
        try {
            return InitialAssignment::validated(std::move(means), std::move(corr));
        } catch (const Error& e) {
            fail("assignment", e.what());
        }
    }();

    std::optional<TimeGrid> times;
    if (j.contains("times")) {
        const json& jt = j["times"];
        if (!jt.is_object() || !jt.contains("start") || !jt.contains("stop") ||
            !jt.contains("steps")) {
            fail("times", "expected an object with start, stop, steps");
        }
        if (!jt["steps"].is_number_unsigned()) {
            fail("times.steps", "expected a positive integer");
        }
        try {
            times = TimeGrid::validated(real_from_json(jt["start"], "times.start"),
                                        real_from_json(jt["stop"], "times.stop"),
                                        jt["steps"].get<std::size_t>());
        } catch (const Error& e) {
            fail("times", e.what());
        }
    }
    return ScenarioFile{std::move(scenario), std::move(assignment), times};
}

ScenarioFile load_scenario(const std::string& path, const Tolerances& tol) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path + ": cannot open for reading");
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    try {
        return scenario_from_json(j, tol);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_scenario(const ScenarioFile& file, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error(path + ": cannot open for writing");
    }
    out << scenario_to_json(file).dump(2) << '\n';
}

json basis_to_json(const HermitianBasis& basis) {
    json j;
    j["dim"] = basis.dim();
    j["gram_residual"] = basis.gram_residual();
    json elems = json::array();
    for (const ComplexMatrix& f : basis.elements()) {
        elems.push_back(matrix_to_json(f));
    }
    j["elements"] = std::move(elems);
    return j;
}

json map_to_json(const LinearMatrixMap& map) {
    json j;
    j["dim"] = map.dim();
    j["kind"] = "linear";
    json images = json::array();
    for (const ComplexMatrix& im : map.images()) {
        images.push_back(matrix_to_json(im));
    }
    j["images"] = std::move(images);
    return j;
}

json map_to_json(const AffineMatrixMap& map) {
    json j = map_to_json(map.linear_part());
    j["kind"] = "affine";
    j["offset"] = matrix_to_json(map.offset());
    return j;
}

std::variant<LinearMatrixMap, AffineMatrixMap> map_from_json(const json& j,
                                                             const Tolerances& tol) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("kind") || !j.contains("images")) {
        fail("map", "expected an object with dim, kind, images");
    }
    if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0) {
        fail("map.dim", "expected a positive integer");
    }
    const auto dim = j["dim"].get<std::size_t>();
    const std::string kind = j["kind"].get<std::string>();
    if (!j["images"].is_array() || j["images"].size() != dim * dim) {
        fail("map.images", "expected " + std::to_string(dim * dim) + " images");
    }
    std::vector<ComplexMatrix> images;
    images.reserve(dim * dim);
    for (std::size_t mu = 0; mu < dim * dim; ++mu) {
        images.push_back(
            matrix_from_json(j["images"][mu], dim, "map.images[" + std::to_string(mu) + "]"));
    }
    LinearMatrixMap linear(HermitianBasis::build_shared(dim), std::move(images));
    if (kind == "linear") {
        if (j.contains("offset")) {
            fail("map.offset", "a linear map must not carry an offset");
        }
        return linear;
    }
    if (kind == "affine") {
        if (!j.contains("offset")) {
            fail("map.offset", "an affine map requires an offset");
        }
        ComplexMatrix offset = matrix_from_json(j["offset"], dim, "map.offset");
        try {
            return AffineMatrixMap(std::move(linear), std::move(offset), tol);
        } catch (const Error& e) {
            fail("map.offset", e.what());
        }
    }
    fail("map.kind", "expected \"linear\" or \"affine\", got \"" + kind + "\"");
}

json report_to_json(const MapAnalysisReport& report) {
    return json{
        {"label", report.label},
        {"time", report.time},
        {"min_choi_eigenvalue", report.min_choi_eigenvalue},
        {"is_cp", report.is_cp},
        {"min_choi_cp_part", report.min_choi_cp_part},
        {"is_cp_cp_part", report.is_cp_cp_part},
        {"trace_residual", report.trace_residual},
        {"hermiticity_residual", report.hermiticity_residual},
        {"min_output_eigenvalue_over_samples", report.min_output_eigenvalue_over_samples},
        {"equivalence_residual", report.equivalence_residual},
        {"d_parameters", report.d_parameters},
    };
}

json reports_to_json(const std::vector<MapAnalysisReport>& reports) {
    json out = json::array();
    for (const MapAnalysisReport& r : reports) {
        out.push_back(report_to_json(r));
    }
    return out;
}

void reports_to_csv(const std::vector<MapAnalysisReport>& reports, std::ostream& out) {
    std::size_t d_count = reports.empty() ? 0 : reports.front().d_parameters.size();
    out << "t,min_choi_full,is_cp_full,min_choi_cp_part,trace_residual,equivalence_residual";
    for (std::size_t i = 1; i <= d_count; ++i) {
        out << ",d_" << i;
    }
    out << '\n';
    for (const MapAnalysisReport& r : reports) {
        out << csv_real(r.time) << ',' << csv_real(r.min_choi_eigenvalue) << ','
            << (r.is_cp ? 1 : 0) << ',' << csv_real(r.min_choi_cp_part) << ','
            << csv_real(r.trace_residual) << ',' << csv_real(r.equivalence_residual);
        for (double d : r.d_parameters) {
            out << ',' << csv_real(d);
        }
        out << '\n';
    }
}

} // namespace dynamap::io
