#include "cli/report.hpp"

#include <cmath>
#include <cstdio>

#include "collar/format.hpp"
#include "collar/helmholtz/io.hpp"

namespace collar::cli {
namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

std::string fmt_f2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt_f3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

} // namespace

bool verdict_pass(const SweepSpec& spec, double slope) {
    return std::abs(slope - spec.expected_slope) <= spec.tolerance;
}

void write_report_json(std::ostream& out, const Report& report) {
    out << "{\n";
    out << "  \"tool\": \"collar sweep\",\n";
    out << "  \"complete\": " << (report.complete ? "true" : "false") << ",\n";
    out << "  \"config_hash\": \"" << report.config_hash << "\",\n";
    out << "  \"config\": " << config_snapshot_json(report.config, "  ") << ",\n";
    out << "  \"sweeps\": [";
    for (std::size_t i = 0; i < report.sweeps.size(); ++i) {
        const SweepOutcome& s = report.sweeps[i];
        out << (i ? ",\n" : "\n");
        out << "    {\n";
        out << "      \"name\": \"" << json_escape(s.spec.name) << "\",\n";
        out << "      \"kind\": \"" << scaling::norm_kind_name(s.spec.kind)
            << "\",\n";
        out << "      \"regime\": \"" << regime_name_of(s.recipe.tag) << "\",\n";
        out << "      \"ratio\": " << fmt_g17(s.recipe.ratio) << ",\n";
        out << "      \"beta\": " << fmt_g17(s.recipe.beta) << ",\n";
        out << "      \"bc\": \"" << helmholtz::bc_name(s.bc) << "\",\n";
        out << "      \"expected_slope\": " << fmt_g17(s.spec.expected_slope)
            << ",\n";
        out << "      \"tolerance\": " << fmt_g17(s.spec.tolerance) << ",\n";
        out << "      \"status\": \"" << (s.ok ? "ok" : "failed") << "\",\n";
        if (!s.ok)
            out << "      \"error\": \"" << json_escape(s.error) << "\",\n";
        out << "      \"lambda_grid\": [";
        for (std::size_t k = 0; k < s.grid.size(); ++k)
            out << (k ? ", " : "") << fmt_g17(s.grid[k]);
        out << "]";
        if (s.ok) {
            out << ",\n      \"points\": [";
            for (std::size_t k = 0; k < s.result.points.size(); ++k) {
                const scaling::SweepPoint& p = s.result.points[k];
                out << (k ? ",\n" : "\n");
                out << "        {\"lambda\": " << fmt_g17(p.lambda)
                    << ", \"l\": " << p.l
                    << ", \"nu_target\": " << fmt_g17(p.nu_target)
                    << ", \"snap_err\": " << fmt_g17(p.snap_err)
                    << ", \"measurement\": " << fmt_g17(p.measurement) << "}";
            }
            out << "\n      ],\n";
            out << "      \"slope\": " << fmt_g17(s.result.fitted_slope) << ",\n";
            out << "      \"intercept\": " << fmt_g17(s.result.intercept)
                << ",\n";
            out << "      \"max_residual\": " << fmt_g17(s.result.max_residual)
                << ",\n";
            out << "      \"verdict\": \"" << (s.pass ? "PASS" : "FAIL")
                << "\",\n";
        } else {
            out << ",\n";
        }
        out << "      \"config_hash\": \"" << report.config_hash << "\"\n";
        out << "    }";
    }
    out << (report.sweeps.empty() ? "" : "\n  ") << "],\n";
    out << "  \"exit_code\": " << report_exit_code(report) << "\n";
    out << "}\n";
}

void write_sweep_csv(std::ostream& out, const scaling::SweepResult& result) {
    out << "lambda,measurement,log_lambda,log_measurement\n";
    for (const scaling::SweepPoint& p : result.points) {
        out << fmt_g9(p.lambda) << ',' << fmt_g9(p.measurement) << ','
            << fmt_g9(std::log(p.lambda)) << ','
            << fmt_g9(std::log(p.measurement)) << '\n';
    }
}

void write_sweep_svg(std::ostream& out, const SweepOutcome& outcome) {
    const double W = 640.0, H = 480.0;
    const double L = 70.0, R = 620.0, T = 44.0, B = 430.0;

    double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
    bool first = true;
    for (const scaling::SweepPoint& p : outcome.result.points) {
        const double x = std::log(p.lambda), y = std::log(p.measurement);
        if (first) {
            x_lo = x_hi = x;
            y_lo = y_hi = y;
            first = false;
        } else {
            x_lo = std::min(x_lo, x);
            x_hi = std::max(x_hi, x);
            y_lo = std::min(y_lo, y);
            y_hi = std::max(y_hi, y);
        }
    }
    const double xpad = 0.05 * (x_hi - x_lo + 1e-12);
    const double ypad = 0.08 * (y_hi - y_lo + 1e-12);
    x_lo -= xpad;
    x_hi += xpad;
    y_lo -= ypad;
    y_hi += ypad;
    const auto px = [&](double x) {
        return L + (x - x_lo) / (x_hi - x_lo) * (R - L);
    };
    const auto py = [&](double y) {
        return B - (y - y_lo) / (y_hi - y_lo) * (B - T);
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
        << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H
        << "\">\n";
    out << "<rect width=\"" << W << "\" height=\"" << H
        << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << fmt_f2(W / 2) << "\" y=\"24\" font-family=\"sans-serif\""
        << " font-size=\"15\" text-anchor=\"middle\">"
        << json_escape(outcome.spec.name) << ": slope "
        << fmt_f3(outcome.result.fitted_slope) << ", expected "
        << fmt_f3(outcome.spec.expected_slope) << " &#177; "
        << fmt_f3(outcome.spec.tolerance) << " ("
        << (outcome.pass ? "PASS" : "FAIL") << ")</text>\n";

    // frame and axis labels
    out << "<rect x=\"" << fmt_f2(L) << "\" y=\"" << fmt_f2(T) << "\" width=\""
        << fmt_f2(R - L) << "\" height=\"" << fmt_f2(B - T)
        << "\" fill=\"none\" stroke=\"#333\"/>\n";
    out << "<text x=\"" << fmt_f2((L + R) / 2) << "\" y=\"470\""
        << " font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
        << "log lambda</text>\n";
    out << "<text x=\"16\" y=\"" << fmt_f2((T + B) / 2) << "\""
        << " font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\""
        << " transform=\"rotate(-90 16 " << fmt_f2((T + B) / 2) << ")\">"
        << "log measurement</text>\n";
    for (int k = 0; k <= 4; ++k) {
        const double x = x_lo + k * (x_hi - x_lo) / 4.0;
        const double y = y_lo + k * (y_hi - y_lo) / 4.0;
        out << "<text x=\"" << fmt_f2(px(x)) << "\" y=\"446\""
            << " font-family=\"sans-serif\" font-size=\"11\""
            << " text-anchor=\"middle\">" << fmt_f2(x) << "</text>\n";
        out << "<text x=\"" << fmt_f2(L - 6) << "\" y=\"" << fmt_f2(py(y) + 4)
            << "\" font-family=\"sans-serif\" font-size=\"11\""
            << " text-anchor=\"end\">" << fmt_f2(y) << "</text>\n";
    }

    // fitted line across the padded range
    const double f_lo = outcome.result.intercept + outcome.result.fitted_slope * x_lo;
    const double f_hi = outcome.result.intercept + outcome.result.fitted_slope * x_hi;
    out << "<line x1=\"" << fmt_f2(px(x_lo)) << "\" y1=\"" << fmt_f2(py(f_lo))
        << "\" x2=\"" << fmt_f2(px(x_hi)) << "\" y2=\"" << fmt_f2(py(f_hi))
        << "\" stroke=\"#c0392b\" stroke-width=\"1.5\"/>\n";

    // expected slope through the centroid, dashed
    double mx = 0.0, my = 0.0;
    for (const scaling::SweepPoint& p : outcome.result.points) {
        mx += std::log(p.lambda);
        my += std::log(p.measurement);
    }
    const double n = static_cast<double>(outcome.result.points.size());
    mx /= n;
    my /= n;
    const double e_lo = my + outcome.spec.expected_slope * (x_lo - mx);
    const double e_hi = my + outcome.spec.expected_slope * (x_hi - mx);
    out << "<line x1=\"" << fmt_f2(px(x_lo)) << "\" y1=\"" << fmt_f2(py(e_lo))
        << "\" x2=\"" << fmt_f2(px(x_hi)) << "\" y2=\"" << fmt_f2(py(e_hi))
        << "\" stroke=\"#888\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";

    for (const scaling::SweepPoint& p : outcome.result.points) {
        out << "<circle cx=\"" << fmt_f2(px(std::log(p.lambda))) << "\" cy=\""
            << fmt_f2(py(std::log(p.measurement)))
            << "\" r=\"4\" fill=\"#1f6fb4\"/>\n";
    }
    out << "</svg>\n";
}

void write_timings_csv(std::ostream& out, const Report& report) {
    out << "sweep,seconds\n";
    double total = 0.0;
    for (const SweepOutcome& s : report.sweeps) {
        out << s.spec.name << ',' << fmt_f3(s.seconds) << '\n';
        total += s.seconds;
    }
    out << "total," << fmt_f3(total) << '\n';
}

int report_exit_code(const Report& report) {
    bool verdict_failed = false;
    for (const SweepOutcome& s : report.sweeps) {
        if (!s.ok) return 3;
        if (!s.pass) verdict_failed = true;
    }
    return verdict_failed ? 1 : 0;
}

void print_report_summary(std::ostream& out, const Report& report) {
    out << "config " << report.config_hash << ", " << report.sweeps.size()
        << " sweep(s)" << (report.complete ? "" : " [interrupted]") << "\n";
    for (const SweepOutcome& s : report.sweeps) {
        if (!s.ok) {
            out << "  ABORT " << s.spec.name << ": " << s.error << "\n";
            continue;
        }
        char line[256];
        std::snprintf(line, sizeof line,
                      "  %s %-24s %-30s slope %+0.4f expected %+0.3f +/- %0.3f"
                      " (%zu points)",
                      s.pass ? "PASS " : "FAIL ", s.spec.name.c_str(),
                      (scaling::norm_kind_name(s.spec.kind) + " " +
                       regime_name_of(s.recipe.tag))
                          .c_str(),
                      s.result.fitted_slope, s.spec.expected_slope,
                      s.spec.tolerance, s.result.points.size());
        out << line << "\n";
    }
}

} // namespace collar::cli
