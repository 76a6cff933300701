#include "cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "cli/report.hpp"
#include "collar/format.hpp"
#include "collar/helmholtz/diagnostics.hpp"
#include "collar/helmholtz/io.hpp"
#include "collar/special/evaluator.hpp"

namespace collar::cli {

volatile std::sig_atomic_t interrupted = 0;

namespace {

namespace fs = std::filesystem;

// Residual gates for the solve command; a run above any of them exits 1.
constexpr double kBoundaryGate = 1e-10;
constexpr double kNeumannGate = 1e-6;
constexpr double kPdeGate = 1e-4;

void ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw ConfigError("cannot create output directory '" + dir +
                          "': " + ec.message());
    const fs::path probe = fs::path(dir) / ".write_probe";
    std::ofstream f(probe);
    if (!f) throw ConfigError("output directory '" + dir + "' is not writable");
    f.close();
    fs::remove(probe, ec);
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream f(path);
    if (!f) throw ConfigError("cannot open '" + path.string() + "' for writing");
    return f;
}

std::vector<std::string> split_csv_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

struct BesselRow {
    std::string method;
    double z = 0.0;
    double J = 0.0, Y = 0.0;
    std::string regime;
    double est = 0.0;
};

BesselRow eval_one(const std::string& method, double nu, double z) {
    using namespace collar::special;
    BesselRow row;
    row.method = method;
    row.z = z;
    if (method == "auto" || method == "exact") {
        const BesselEval r = evaluate_bessel(Order{nu}, z);
        row.J = r.J.value.real();
        row.Y = r.Y.value.real();
        row.est = std::max(r.J.est_rel_error, r.Y.est_rel_error);
        row.regime = std::string(regime_name(r.J.regime_used));
    } else if (method == "uniform") {
        const UniformBesselResult u = uniform_bessel(nu, z / nu);
        row.J = u.J.value();
        row.Y = u.Y.value();
        row.est = u.est_rel_error;
        row.regime = "uniform_airy";
    } else if (method == "debye") {
        const DebyeResult d = debye_hankel(nu, z);
        row.J = d.H.real();
        row.Y = d.H.imag();
        row.est = d.est_rel_error;
        row.regime = "debye";
    } else if (method == "transitional") {
        const double tau = (z - nu) / std::cbrt(nu);
        const TransitionalResult t = transitional_bessel(nu, tau);
        row.J = t.J;
        row.Y = t.Y;
        row.est = t.est_rel_error;
        row.regime = "transitional";
    } else { // large_argument; the list is validated before evaluation
        const LargeArgumentResult a = large_argument_hankel(nu, z);
        row.J = a.H.real();
        row.Y = a.H.imag();
        row.est = a.est_rel_error;
        row.regime = "large_argument";
    }
    return row;
}

} // namespace

std::vector<std::string> method_names() {
    return {"auto", "exact", "uniform", "debye", "transitional",
            "large_argument"};
}

int run_bessel(const BesselArgs& args) {
    const std::vector<std::string> methods = split_csv_list(args.methods);
    if (methods.empty()) throw ConfigError("--method list is empty");
    const std::vector<std::string> known = method_names();
    for (const std::string& m : methods) {
        bool ok = false;
        for (const std::string& k : known) ok = ok || m == k;
        if (!ok) throw ConfigError("unknown method '" + m + "'");
        if (m == "exact" && !special::Order{args.nu}.is_half_integer())
            throw ConfigError("method 'exact' needs a half-integer order, got " +
                              fmt_g17(args.nu));
    }
    if (!(args.nu >= 0.0)) throw ConfigError("--nu must be >= 0");

    std::vector<BesselRow> rows;
    for (const std::string& m : methods) {
        for (double z : args.z) {
            try {
                rows.push_back(eval_one(m, args.nu, z));
            } catch (const std::exception& e) {
                std::cerr << "bessel: method " << m << " at nu=" << fmt_g9(args.nu)
                          << " z=" << fmt_g9(z) << ": " << e.what() << "\n";
                return 3;
            }
        }
    }

    std::printf("%-14s %-14s %-16s %-16s %-16s %-14s %s\n", "method", "z", "J",
                "Y", "H2", "regime", "est_rel_error");
    for (const BesselRow& r : rows) {
        const double h2 = r.J * r.J + r.Y * r.Y;
        std::printf("%-14s %-14s %-16s %-16s %-16s %-14s %s\n", r.method.c_str(),
                    fmt_g9(r.z).c_str(), fmt_g9(r.J).c_str(),
                    fmt_g9(r.Y).c_str(), fmt_g9(h2).c_str(), r.regime.c_str(),
                    fmt_g9(r.est).c_str());
    }

    if (!args.out_dir.empty()) {
        ensure_out_dir(args.out_dir);
        std::ofstream csv = open_out(fs::path(args.out_dir) / "bessel.csv");
        csv << "method,z,J,Y,H2,regime,est_rel_error\n";
        for (const BesselRow& r : rows) {
            const double h2 = r.J * r.J + r.Y * r.Y;
            csv << r.method << ',' << fmt_g9(r.z) << ',' << fmt_g9(r.J) << ','
                << fmt_g9(r.Y) << ',' << fmt_g9(h2) << ',' << r.regime << ','
                << fmt_g9(r.est) << '\n';
        }
    }
    return 0;
}

int run_solve(const SolveArgs& args, const ExperimentConfig& cfg) {
    using namespace collar::helmholtz;
    if (args.l < 0) throw ConfigError("--l must be >= 0");
    if (!(args.lambda > 1.0)) throw ConfigError("--lambda must be > 1");
    ensure_out_dir(cfg.out_dir);

    const AnnulusSpec spec =
        AnnulusSpec::build(cfg.alpha, args.lambda, cfg.quad, cfg.cutoff);
    RadialGridFunction f = RadialGridFunction::zeros(spec);
    for (std::complex<double>& v : f.values) v = 1.0;

    const ModeIndex mode{args.l};
    const RadialGridFunction w = solve_mode(mode, args.lambda, f, spec, cfg.bc);
    const ModeResiduals res = compute_residuals(mode, args.lambda, f, spec);

    {
        std::ofstream csv = open_out(fs::path(cfg.out_dir) / "solution.csv");
        write_radial_csv(csv, w);
        std::ofstream json = open_out(fs::path(cfg.out_dir) / "solution.json");
        write_mode_json(json, mode, args.lambda, spec, cfg.bc, res);
    }

    std::printf(
        "solve l=%d lambda=%s bc=%s nodes=%zu: boundary=%s neumann=%s pde=%s\n",
        args.l, fmt_g9(args.lambda).c_str(), bc_name(cfg.bc).c_str(),
        spec.nodes.size(), fmt_g9(res.boundary).c_str(),
        fmt_g9(res.neumann).c_str(), fmt_g9(res.pde).c_str());

    bool bad = false;
    const auto gate = [&](const char* name, double value, double limit) {
        if (value <= limit) return;
        std::cerr << "solve: " << name << " residual " << fmt_g9(value)
                  << " exceeds " << fmt_g9(limit) << "\n";
        bad = true;
    };
    gate("boundary", res.boundary, kBoundaryGate);
    gate("neumann", res.neumann, kNeumannGate);
    gate("pde", res.pde, kPdeGate);
    return bad ? 1 : 0;
}

int run_sweep(const ExperimentConfig& cfg) {
    ensure_out_dir(cfg.out_dir);

    Report report;
    report.config = cfg;
    report.config_hash = config_hash_hex(cfg);

    for (const SweepSpec& spec : cfg.sweeps) {
        if (interrupted) {
            report.complete = false;
            break;
        }
        SweepOutcome out;
        out.spec = spec;
        out.recipe = resolved_recipe(cfg, spec);
        out.bc = resolved_bc(cfg, spec);

        const auto t0 = std::chrono::steady_clock::now();
        try {
            out.grid = out.recipe.tag == scaling::RegimeTag::Glancing
                           ? scaling::glancing_lambda_grid(
                                 cfg.lambda_min, cfg.lambda_max, out.recipe.beta,
                                 spec.max_points)
                           : scaling::dyadic_lambda_grid(cfg.lambda_min,
                                                         cfg.lambda_max);
            scaling::SweepOptions opt;
            opt.quad = cfg.quad;
            opt.cutoff = cfg.cutoff;
            opt.bc = out.bc;
            out.result = scaling::sweep_and_fit(spec.kind, out.recipe, cfg.alpha,
                                                out.grid, opt);
            out.ok = true;
            out.pass = verdict_pass(spec, out.result.fitted_slope);
        } catch (const std::exception& e) {
            out.ok = false;
            out.error = e.what();
        }
        out.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        report.sweeps.push_back(std::move(out));
    }

    {
        std::ofstream json = open_out(fs::path(cfg.out_dir) / "report.json");
        write_report_json(json, report);
        std::ofstream times = open_out(fs::path(cfg.out_dir) / "timings.csv");
        write_timings_csv(times, report);
    }
    for (const SweepOutcome& s : report.sweeps) {
        if (!s.ok) continue;
        std::ofstream csv =
            open_out(fs::path(cfg.out_dir) / ("sweep_" + s.spec.name + ".csv"));
        write_sweep_csv(csv, s.result);
        if (cfg.plot) {
            std::ofstream svg = open_out(fs::path(cfg.out_dir) /
                                         ("sweep_" + s.spec.name + ".svg"));
            write_sweep_svg(svg, s);
        }
    }

    print_report_summary(std::cout, report);
    if (!report.complete) {
        std::cerr << "sweep: interrupted, partial report flushed to "
                  << cfg.out_dir << "\n";
        return 130;
    }
    return report_exit_code(report);
}

int run_report(const std::string& dir, bool plot) {
    namespace nj = nlohmann;
    const fs::path path = fs::path(dir) / "report.json";
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path.string() + "'");
    nj::json doc;
    try {
        doc = nj::json::parse(in);
    } catch (const nj::json::exception& e) {
        throw ConfigError("malformed report: " + std::string(e.what()));
    }

    Report report;
    try {
        report.config_hash = doc.at("config_hash").get<std::string>();
        report.complete = doc.at("complete").get<bool>();
        for (const nj::json& s : doc.at("sweeps")) {
            SweepOutcome out;
            out.spec.name = s.at("name").get<std::string>();
            out.spec.kind = parse_norm_kind(s.at("kind").get<std::string>());
            out.recipe.tag = parse_regime(s.at("regime").get<std::string>());
            out.recipe.ratio = s.at("ratio").get<double>();
            out.recipe.beta = s.at("beta").get<double>();
            out.bc = parse_bc(s.at("bc").get<std::string>());
            out.spec.expected_slope = s.at("expected_slope").get<double>();
            out.spec.tolerance = s.at("tolerance").get<double>();
            out.ok = s.at("status").get<std::string>() == "ok";
            if (out.ok) {
                for (const nj::json& p : s.at("points")) {
                    scaling::SweepPoint sp;
                    sp.lambda = p.at("lambda").get<double>();
                    sp.l = p.at("l").get<int>();
                    sp.nu_target = p.at("nu_target").get<double>();
                    sp.snap_err = p.at("snap_err").get<double>();
                    sp.measurement = p.at("measurement").get<double>();
                    out.result.points.push_back(sp);
                }
                out.result.fitted_slope = s.at("slope").get<double>();
                out.result.intercept = s.at("intercept").get<double>();
                out.result.max_residual = s.at("max_residual").get<double>();
                out.pass = s.at("verdict").get<std::string>() == "PASS";
            } else {
                out.error = s.at("error").get<std::string>();
            }
            report.sweeps.push_back(std::move(out));
        }
    } catch (const nj::json::exception& e) {
        throw ConfigError("report is missing fields: " + std::string(e.what()));
    }

    print_report_summary(std::cout, report);
    if (plot) {
        for (const SweepOutcome& s : report.sweeps) {
            if (!s.ok) continue;
            std::ofstream svg =
                open_out(fs::path(dir) / ("sweep_" + s.spec.name + ".svg"));
            write_sweep_svg(svg, s);
        }
    }
    return report_exit_code(report);
}

} // namespace collar::cli
