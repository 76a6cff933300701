#include <csignal>
#include <iostream>

#include "CLI11.hpp"

#include "cli/commands.hpp"

namespace {

void on_sigint(int) { collar::cli::interrupted = 1; }

// Staging for the shared flags; count() on the stored options tells which
// ones were actually passed so they can override config-file values.
struct GlobalFlags {
    double alpha = 0.0, beta = 0.0, epsilon0 = 0.0;
    double lambda_min = 0.0, lambda_max = 0.0;
    std::string bc, out, config;
    bool plot = false;
    CLI::Option* o_alpha = nullptr;
    CLI::Option* o_beta = nullptr;
    CLI::Option* o_eps = nullptr;
    CLI::Option* o_lmin = nullptr;
    CLI::Option* o_lmax = nullptr;
    CLI::Option* o_bc = nullptr;
    CLI::Option* o_out = nullptr;
};

void add_global_flags(CLI::App* cmd, GlobalFlags& fl) {
    fl.o_alpha =
        cmd->add_option("--alpha", fl.alpha, "Collar width exponent, in [0, 2/3)");
    fl.o_beta =
        cmd->add_option("--beta", fl.beta, "Glancing window exponent, in (0, 1)");
    fl.o_eps = cmd->add_option("--epsilon0", fl.epsilon0,
                               "Regime classification margin, in (0, 1/2)");
    fl.o_lmin = cmd->add_option("--lambda-min", fl.lambda_min,
                                "Lowest frequency of the grid");
    fl.o_lmax = cmd->add_option("--lambda-max", fl.lambda_max,
                                "Highest frequency of the grid");
    fl.o_bc = cmd->add_option("--bc", fl.bc,
                              "Boundary condition: dirichlet or neumann");
    fl.o_out = cmd->add_option("--out", fl.out, "Output directory");
    cmd->add_option("--config", fl.config,
                    "Config file: key = value lines, [sweep NAME] sections");
    cmd->add_flag("--plot", fl.plot, "Emit SVG log-log plots");
}

// File config first, passed flags on top, then the range checks.
collar::cli::ExperimentConfig resolve(const GlobalFlags& fl) {
    using namespace collar::cli;
    ExperimentConfig cfg =
        fl.config.empty() ? ExperimentConfig{} : load_config_file(fl.config);
    if (fl.o_alpha->count()) cfg.alpha = fl.alpha;
    if (fl.o_beta->count()) cfg.beta = fl.beta;
    if (fl.o_eps->count()) cfg.epsilon0 = fl.epsilon0;
    if (fl.o_lmin->count()) cfg.lambda_min = fl.lambda_min;
    if (fl.o_lmax->count()) cfg.lambda_max = fl.lambda_max;
    if (fl.o_bc->count()) cfg.bc = parse_bc(fl.bc);
    if (fl.o_out->count()) cfg.out_dir = fl.out;
    if (fl.plot) cfg.plot = true;
    validate(cfg);
    return cfg;
}

template <typename F>
int guarded(F&& f) {
    using collar::cli::ConfigError;
    try {
        return f();
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 3;
    }
}

} // namespace

int main(int argc, char** argv) {
    using namespace collar::cli;
    std::signal(SIGINT, on_sigint);

    CLI::App app{"Collar lab: half-integer Bessel evaluation, exterior collar "
                 "solves and frequency scaling sweeps"};
    app.require_subcommand(1);

    CLI::App* c_bessel =
        app.add_subcommand("bessel", "Evaluate J, Y, |H|^2 along a z list");
    BesselArgs bargs;
    c_bessel->add_option("--nu", bargs.nu, "Order (half-integers take the exact path)");
    c_bessel->add_option("--z", bargs.z, "Arguments; repeatable or comma separated")
        ->delimiter(',');
    c_bessel->add_option("--method", bargs.methods,
                         "Comma list of auto, exact, uniform, debye, "
                         "transitional, large_argument");
    c_bessel->add_option("--out", bargs.out_dir, "Directory for bessel.csv");

    CLI::App* c_solve =
        app.add_subcommand("solve", "Solve one collar mode with unit forcing");
    SolveArgs sargs;
    GlobalFlags solve_fl;
    c_solve->add_option("--l", sargs.l, "Spherical mode index, >= 0");
    c_solve->add_option("--lambda", sargs.lambda, "Frequency, > 1");
    add_global_flags(c_solve, solve_fl);

    CLI::App* c_sweep =
        app.add_subcommand("sweep", "Run configured sweeps and write a report");
    GlobalFlags sweep_fl;
    add_global_flags(c_sweep, sweep_fl);

    CLI::App* c_report =
        app.add_subcommand("report", "Re-render an existing report.json");
    std::string report_dir = ".";
    bool report_plot = false;
    c_report->add_option("--out", report_dir, "Directory holding report.json");
    c_report->add_flag("--plot", report_plot, "Regenerate SVG plots");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (*c_bessel) return guarded([&] { return run_bessel(bargs); });
    if (*c_solve)
        return guarded([&] { return run_solve(sargs, resolve(solve_fl)); });
    if (*c_sweep) return guarded([&] { return run_sweep(resolve(sweep_fl)); });
    return guarded([&] { return run_report(report_dir, report_plot); });
}
