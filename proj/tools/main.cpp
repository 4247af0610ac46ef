// Command-line front end: basis export, scenario analysis, time sweeps, the
// bundled demo, and the acceptance selftest.

#include "dynamap/analysis.hpp"
#include "dynamap/demo.hpp"
#include "dynamap/errors.hpp"
#include "dynamap/io.hpp"
#include "dynamap/operator_basis.hpp"
#include "dynamap/selftest.hpp"
#include "dynamap/tolerances.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

using namespace dynamap;

struct CommonOptions {
    std::uint64_t seed = 42;
    std::size_t samples = 50;
    std::optional<double> tol_eq;
    std::optional<double> tol_herm;
    std::optional<double> tol_psd;

    Tolerances tolerances() const {
        Tolerances tol = tolerances_from_env();
        if (tol_eq) {
            tol.tol_eq = *tol_eq;
        }
        if (tol_herm) {
            tol.tol_herm = *tol_herm;
        }
        if (tol_psd) {
            tol.tol_psd = *tol_psd;
        }
        return tol;
    }

    AnalysisOptions analysis() const {
        AnalysisOptions options;
        options.sample_count = samples;
        options.seed = seed;
        options.tol = tolerances();
        return options;
    }
};

// Writes to the path when given, else to stdout.
void emit(const std::optional<std::string>& path, const std::string& text) {
    if (!path) {
        std::cout << text;
        return;
    }
    std::ofstream out(*path);
    if (!out) {
        throw Error(*path + ": cannot open for writing");
    }
    out << text;
}

int cmd_basis(std::size_t dim, const std::optional<std::string>& out_path,
              const Tolerances& tol) {
    const HermitianBasis basis = HermitianBasis::build(dim);
    emit(out_path, io::basis_to_json(basis).dump(2) + "\n");
    return basis.gram_residual() <= tol.tol_eq ? 0 : 1;
}

std::string render_reports(const std::vector<MapAnalysisReport>& reports,
                           const std::string& format, bool single) {
    if (format == "csv") {
        std::ostringstream csv;
        io::reports_to_csv(reports, csv);
        return csv.str();
    }
    if (single && reports.size() == 1) {
        return io::report_to_json(reports.front()).dump(2) + "\n";
    }
    return io::reports_to_json(reports).dump(2) + "\n";
}

int cmd_analyze(const std::string& scenario_path, double t,
                const std::optional<std::string>& out_path, const std::string& format,
                const CommonOptions& common) {
    const io::ScenarioFile file = io::load_scenario(scenario_path, common.tolerances());
    const MapAnalysisReport report =
        analyze_at(file.scenario, file.assignment, t, common.analysis());
    emit(out_path, render_reports({report}, format, true));
    return 0;
}

int cmd_sweep(const std::string& scenario_path, std::optional<double> t0,
              std::optional<double> t1, std::optional<std::size_t> steps,
              const std::optional<std::string>& out_path, const std::string& format,
              const CommonOptions& common) {
    const io::ScenarioFile file = io::load_scenario(scenario_path, common.tolerances());
    io::TimeGrid grid;
    if (t0 && t1 && steps) {
        grid = io::TimeGrid::validated(*t0, *t1, *steps);
    } else if (!t0 && !t1 && !steps && file.times) {
        grid = *file.times;
    } else {
        throw InvalidArgument(
            "sweep: pass --t0, --t1 and --steps together, or none to use the scenario's grid");
    }
    const std::vector<double> times = grid.points();
    const std::vector<MapAnalysisReport> reports =
        time_sweep(file.scenario, file.assignment, times, common.analysis());
    emit(out_path, render_reports(reports, format, false));
    return 0;
}

int cmd_demo(const std::string& out_dir, bool zero_correlations, const CommonOptions& common) {
    namespace fs = std::filesystem;
    const io::ScenarioFile file = demo::bundled_scenario(zero_correlations);
    fs::create_directories(out_dir);
    const fs::path scenario_path = fs::path(out_dir) / "demo_scenario.json";
    io::save_scenario(file, scenario_path.string());

    const std::vector<double> times = file.times->points();
    const std::vector<MapAnalysisReport> reports =
        time_sweep(file.scenario, file.assignment, times, common.analysis());

    const fs::path csv_path = fs::path(out_dir) / "demo_sweep.csv";
    {
        std::ofstream csv(csv_path);
        if (!csv) {
            throw Error(csv_path.string() + ": cannot open for writing");
        }
        io::reports_to_csv(reports, csv);
    }

    const demo::DemoSummary summary = demo::summarize(reports);
    std::cout << "scenario: " << file.scenario.label << "\n"
              << "wrote " << scenario_path.string() << " and " << csv_path.string() << "\n"
              << "max cp-part Choi deficit: " << summary.max_cp_part_deficit << "\n"
              << "max |d_alpha| over sweep: " << summary.max_abs_d << "\n";
    if (summary.violation_found) {
        std::cout << "full map loses complete positivity: min Choi eigenvalue "
                  << summary.witness_min_choi << " at t = " << summary.witness_time << "\n";
    } else {
        std::cout << "full map stayed completely positive over the sweep (most negative "
                  << "Choi eigenvalue " << summary.witness_min_choi << " at t = "
                  << summary.witness_time << ")\n";
    }

    // The bundle promises: CP part clean always; a clear violation exactly
    // when the correlations are enabled.
    if (summary.max_cp_part_deficit > 1e-9) {
        std::cerr << "demo: cp-part deficit exceeds bound\n";
        return 1;
    }
    if (!zero_correlations && !summary.violation_found) {
        std::cerr << "demo: expected a CP violation with correlations enabled\n";
        return 1;
    }
    if (zero_correlations && (summary.violation_found || summary.max_abs_d > 1e-10)) {
        std::cerr << "demo: product assignment must stay CP with d = 0\n";
        return 1;
    }
    return 0;
}

int cmd_selftest(const CommonOptions& common) {
    const auto results = selftest::run_acceptance(common.tolerances(), common.seed);
    selftest::print_results(std::cout, results);
    return selftest::all_passed(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"density-matrix dynamical maps: build, convert, analyze"};
    app.require_subcommand(1);

    CommonOptions common;
    app.add_option("--seed", common.seed, "seed for sampled states and parameters");
    app.add_option("--samples", common.samples, "sample count for state-based checks");
    app.add_option("--tol-eq", common.tol_eq, "override equality tolerance");
    app.add_option("--tol-herm", common.tol_herm, "override Hermiticity tolerance");
    app.add_option("--tol-psd", common.tol_psd, "override PSD eigenvalue floor");

    auto* basis = app.add_subcommand("basis", "export the Hermitian operator basis as JSON");
    std::size_t basis_dim = 0;
    std::optional<std::string> basis_out;
    basis->add_option("--dim", basis_dim, "basis dimension N")->required();
    basis->add_option("--out", basis_out, "output path (default stdout)");

    auto* analyze = app.add_subcommand("analyze", "analyze a scenario at one time");
    std::string analyze_scenario;
    double analyze_time = 0.0;
    std::optional<std::string> analyze_out;
    std::string analyze_format = "json";
    analyze->add_option("--scenario", analyze_scenario, "scenario JSON path")->required();
    analyze->add_option("--time", analyze_time, "evolution time")->required();
    analyze->add_option("--out", analyze_out, "output path (default stdout)");
    analyze->add_option("--format", analyze_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* sweep = app.add_subcommand("sweep", "analyze a scenario over a time grid");
    std::string sweep_scenario;
    std::optional<double> sweep_t0;
    std::optional<double> sweep_t1;
    std::optional<std::size_t> sweep_steps;
    std::optional<std::string> sweep_out;
    std::string sweep_format = "json";
    sweep->add_option("--scenario", sweep_scenario, "scenario JSON path")->required();
    sweep->add_option("--t0", sweep_t0, "grid start");
    sweep->add_option("--t1", sweep_t1, "grid stop");
    sweep->add_option("--steps", sweep_steps, "number of grid points");
    sweep->add_option("--out", sweep_out, "output path (default stdout)");
    sweep->add_option("--format", sweep_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* demo_cmd = app.add_subcommand("demo", "write and sweep the bundled two-qubit demo");
    std::string demo_out = ".";
    bool demo_zero = false;
    demo_cmd->add_option("--out", demo_out, "output directory (default .)");
    demo_cmd->add_flag("--zero-correlations", demo_zero,
                       "zero the assignment parameters (product case)");

    auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance criteria");
    (void)selftest_cmd;

    CLI11_PARSE(app, argc, argv);

    try {
        if (basis->parsed()) {
            return cmd_basis(basis_dim, basis_out, common.tolerances());
        }
        if (analyze->parsed()) {
            return cmd_analyze(analyze_scenario, analyze_time, analyze_out, analyze_format,
                               common);
        }
        if (sweep->parsed()) {
            return cmd_sweep(sweep_scenario, sweep_t0, sweep_t1, sweep_steps, sweep_out,
                             sweep_format, common);
        }
        if (demo_cmd->parsed()) {
            return cmd_demo(demo_out, demo_zero, common);
        }
        if (selftest_cmd->parsed()) {
            return cmd_selftest(common);
        }
    } catch (const NotHermitian& e) {
        std::cerr << "NotHermitian: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
