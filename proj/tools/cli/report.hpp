#ifndef COLLAR_CLI_REPORT_HPP
#define COLLAR_CLI_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "collar/scaling/sweep.hpp"

namespace collar::cli {

// Outcome of one configured sweep.  seconds is wall-clock and lands in a
// sidecar file, never in report.json, so reruns stay byte-identical.
struct SweepOutcome {
    SweepSpec spec;
    scaling::RegimeRecipe recipe{}; // after global beta fallback
    helmholtz::BoundaryCondition bc = helmholtz::BoundaryCondition::Dirichlet;
    std::vector<double> grid;
    scaling::SweepResult result{};
    bool ok = false;
    std::string error;
    bool pass = false;
    double seconds = 0.0;
};

struct Report {
    ExperimentConfig config;
    std::string config_hash;
    std::vector<SweepOutcome> sweeps;
    bool complete = true; // false when an interrupt flushed a partial report
};

bool verdict_pass(const SweepSpec& spec, double slope);

// Deterministic JSON: fixed key order, %.17g floats, no timing fields.
void write_report_json(std::ostream& out, const Report& report);

// lambda, measurement, log_lambda, log_measurement at %.9g.
void write_sweep_csv(std::ostream& out, const scaling::SweepResult& result);

// Log-log scatter with the fitted line; self-contained SVG.
void write_sweep_svg(std::ostream& out, const SweepOutcome& outcome);

// sweep name, wall seconds; the only non-reproducible output.
void write_timings_csv(std::ostream& out, const Report& report);

// 0 all pass, 1 verdict failure, 3 any sweep aborted.
int report_exit_code(const Report& report);

// Human summary, one line per sweep.
void print_report_summary(std::ostream& out, const Report& report);

} // namespace collar::cli

#endif
