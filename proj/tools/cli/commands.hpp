#ifndef COLLAR_CLI_COMMANDS_HPP
#define COLLAR_CLI_COMMANDS_HPP

#include <csignal>
#include <string>
#include <vector>

#include "cli/config.hpp"

namespace collar::cli {

// Set by the SIGINT handler.  The sweep loop checks it between sweeps and
// flushes a partial report before exiting 130.
extern volatile std::sig_atomic_t interrupted;

struct BesselArgs {
    double nu = 0.5;
    std::vector<double> z;
    std::string methods = "auto"; // comma list; see method_names()
    std::string out_dir;          // empty: stdout table only
};

std::vector<std::string> method_names();

// Prints a J/Y/|H|^2 table per (method, z); exports bessel.csv when an
// output directory is given.
int run_bessel(const BesselArgs& args);

struct SolveArgs {
    int l = 0;
    double lambda = 128.0;
};

// Solves one collar mode with unit forcing, writes solution.csv and
// solution.json, and gates on the residual diagnostics.
int run_solve(const SolveArgs& args, const ExperimentConfig& cfg);

// Runs every configured sweep, writes report.json, per-sweep CSV, timings
// sidecar and optional SVG plots; exit code reflects the verdicts.
int run_sweep(const ExperimentConfig& cfg);

// Re-renders an existing report.json: summary to stdout, SVGs with plot.
int run_report(const std::string& dir, bool plot);

} // namespace collar::cli

#endif
