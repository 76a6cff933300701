#include "cli/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "collar/format.hpp"
#include "collar/helmholtz/io.hpp"

namespace collar::cli {
namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

[[noreturn]] void fail(int line_no, const std::string& why) {
    std::ostringstream os;
    os << "config line " << line_no << ": " << why;
    throw ConfigError(os.str());
}

double parse_double(const std::string& v, int line_no) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        fail(line_no, "expected a number, got '" + v + "'");
    return x;
}

long parse_long(const std::string& v, int line_no) {
    char* end = nullptr;
    const long x = std::strtol(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0')
        fail(line_no, "expected an integer, got '" + v + "'");
    return x;
}

bool parse_bool(const std::string& v, int line_no) {
    if (v == "true") return true;
    if (v == "false") return false;
    fail(line_no, "expected true or false, got '" + v + "'");
}

// keys a sweep section must state before the sweep can be judged
struct SectionState {
    bool kind_set = false;
    bool regime_set = false;
    bool expected_set = false;
    bool tolerance_set = false;
};

void apply_global(ExperimentConfig& cfg, const std::string& key,
                  const std::string& value, int line_no) {
    if (key == "alpha") cfg.alpha = parse_double(value, line_no);
    else if (key == "beta") cfg.beta = parse_double(value, line_no);
    else if (key == "epsilon0") cfg.epsilon0 = parse_double(value, line_no);
    else if (key == "lambda_min") cfg.lambda_min = parse_double(value, line_no);
    else if (key == "lambda_max") cfg.lambda_max = parse_double(value, line_no);
    else if (key == "bc") cfg.bc = parse_bc(value);
    else if (key == "out") cfg.out_dir = value;
    else if (key == "plot") cfg.plot = parse_bool(value, line_no);
    else if (key == "points_per_wavelength")
        cfg.quad.points_per_wavelength = parse_double(value, line_no);
    else if (key == "min_nodes")
        cfg.quad.min_nodes = static_cast<int>(parse_long(value, line_no));
    else if (key == "lambdas_per_panel")
        cfg.quad.lambdas_per_panel = parse_double(value, line_no);
    else if (key == "cutoff_rate") cfg.cutoff.rate = parse_double(value, line_no);
    else fail(line_no, "unknown global key '" + key + "'");
}

void apply_sweep(SweepSpec& sweep, SectionState& st, const std::string& key,
                 const std::string& value, int line_no) {
    if (key == "kind") {
        sweep.kind = parse_norm_kind(value);
        st.kind_set = true;
    } else if (key == "regime") {
        sweep.recipe.tag = parse_regime(value);
        st.regime_set = true;
    } else if (key == "ratio") {
        sweep.recipe.ratio = parse_double(value, line_no);
    } else if (key == "beta") {
        sweep.recipe.beta = parse_double(value, line_no);
        sweep.beta_from_global = false;
    } else if (key == "bc") {
        sweep.bc = parse_bc(value);
        sweep.bc_from_global = false;
    } else if (key == "expected_slope") {
        sweep.expected_slope = parse_double(value, line_no);
        st.expected_set = true;
    } else if (key == "tolerance") {
        sweep.tolerance = parse_double(value, line_no);
        st.tolerance_set = true;
    } else if (key == "max_points") {
        const long n = parse_long(value, line_no);
        if (n < 2) fail(line_no, "max_points must be >= 2");
        sweep.max_points = static_cast<std::size_t>(n);
    } else {
        fail(line_no, "unknown sweep key '" + key + "'");
    }
}

void finish_section(const SweepSpec& sweep, const SectionState& st) {
    const auto missing = [&](const char* key) {
        throw ConfigError("sweep '" + sweep.name + "' is missing required key '" +
                          key + "'");
    };
    if (!st.kind_set) missing("kind");
    if (!st.regime_set) missing("regime");
    if (!st.expected_set) missing("expected_slope");
    if (!st.tolerance_set) missing("tolerance");
}

} // namespace

helmholtz::BoundaryCondition parse_bc(const std::string& text) {
    if (text == "dirichlet") return helmholtz::BoundaryCondition::Dirichlet;
    if (text == "neumann") return helmholtz::BoundaryCondition::Neumann;
    throw ConfigError("boundary condition must be dirichlet or neumann, got '" +
                      text + "'");
}

scaling::NormKind parse_norm_kind(const std::string& text) {
    using scaling::NormKind;
    for (NormKind k : {NormKind::HankelL2Sq, NormKind::HankelModulusSqAtBoundary,
                       NormKind::CrossTermL2, NormKind::OperatorNorm,
                       NormKind::SolutionNorm})
        if (text == scaling::norm_kind_name(k)) return k;
    throw ConfigError("unknown measurement kind '" + text + "'");
}

scaling::RegimeTag parse_regime(const std::string& text) {
    if (text == "transversal") return scaling::RegimeTag::Transversal;
    if (text == "glancing") return scaling::RegimeTag::Glancing;
    if (text == "elliptic") return scaling::RegimeTag::Elliptic;
    throw ConfigError(
        "regime must be transversal, glancing or elliptic, got '" + text + "'");
}

std::string regime_name_of(scaling::RegimeTag tag) {
    switch (tag) {
    case scaling::RegimeTag::Transversal: return "transversal";
    case scaling::RegimeTag::Glancing: return "glancing";
    case scaling::RegimeTag::Elliptic: return "elliptic";
    }
    return "unknown";
}

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool in_section = false;
    SectionState st;
    std::set<std::string> names;

    while (std::getline(in, raw)) {
        ++line_no;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail(line_no, "unterminated section header");
            const std::string inner = trim(line.substr(1, line.size() - 2));
            if (inner.rfind("sweep", 0) != 0)
                fail(line_no, "only [sweep NAME] sections are recognized");
            const std::string name = trim(inner.substr(5));
            if (name.empty()) fail(line_no, "sweep section needs a name");
            for (char c : name)
                if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' &&
                    c != '-')
                    fail(line_no, "sweep name must be alphanumeric/_/-");
            if (!names.insert(name).second)
                fail(line_no, "duplicate sweep name '" + name + "'");
            if (in_section) finish_section(cfg.sweeps.back(), st);
            cfg.sweeps.emplace_back();
            cfg.sweeps.back().name = name;
            st = SectionState{};
            in_section = true;
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail(line_no, "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(line_no, "empty key");
        if (value.empty()) fail(line_no, "empty value for key '" + key + "'");
        if (in_section)
            apply_sweep(cfg.sweeps.back(), st, key, value, line_no);
        else
            apply_global(cfg, key, value, line_no);
    }
    if (in_section) finish_section(cfg.sweeps.back(), st);
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

void validate(const ExperimentConfig& cfg) {
    const auto bad = [](const std::string& why) { throw ConfigError(why); };
    if (!(cfg.alpha >= 0.0) || !(cfg.alpha < 2.0 / 3.0))
        bad("alpha must lie in [0, 2/3)");
    if (!(cfg.epsilon0 > 0.0) || !(cfg.epsilon0 < 0.5))
        bad("epsilon0 must lie in (0, 1/2)");
    if (!(cfg.lambda_min > 1.0) || !(cfg.lambda_max >= cfg.lambda_min))
        bad("need 1 < lambda_min <= lambda_max");
    if (!(cfg.quad.points_per_wavelength > 0.0))
        bad("points_per_wavelength must be positive");
    if (cfg.quad.min_nodes < 2) bad("min_nodes must be >= 2");
    if (!(cfg.quad.lambdas_per_panel > 0.0))
        bad("lambdas_per_panel must be positive");
    if (!(cfg.cutoff.rate > 0.0)) bad("cutoff_rate must be positive");
    for (const SweepSpec& s : cfg.sweeps) {
        if (!(s.tolerance > 0.0))
            bad("sweep '" + s.name + "': tolerance must be positive");
        const scaling::RegimeRecipe r = resolved_recipe(cfg, s);
        if (r.tag == scaling::RegimeTag::Glancing &&
            (!(r.beta > 0.0) || !(r.beta < 1.0)))
            bad("sweep '" + s.name + "': glancing beta must lie in (0, 1)");
        if (r.tag != scaling::RegimeTag::Glancing && !(r.ratio > 0.0))
            bad("sweep '" + s.name + "': ratio must be positive");
        if (s.max_points < 5)
            bad("sweep '" + s.name + "': max_points must be >= 5 for a fit");
        if (r.tag != scaling::RegimeTag::Glancing &&
            scaling::dyadic_lambda_grid(cfg.lambda_min, cfg.lambda_max).size() <
                5)
            bad("sweep '" + s.name +
                "': lambda range holds fewer than 5 dyadic points");
    }
}

scaling::RegimeRecipe resolved_recipe(const ExperimentConfig& cfg,
                                      const SweepSpec& spec) {
    scaling::RegimeRecipe r = spec.recipe;
    if (spec.beta_from_global) r.beta = cfg.beta;
    return r;
}

helmholtz::BoundaryCondition resolved_bc(const ExperimentConfig& cfg,
                                         const SweepSpec& spec) {
    return spec.bc_from_global ? cfg.bc : spec.bc;
}

std::string config_snapshot_json(const ExperimentConfig& cfg,
                                 const std::string& indent) {
    std::ostringstream os;
    const std::string& p = indent;
    os << "{\n";
    os << p << "  \"alpha\": " << fmt_g17(cfg.alpha) << ",\n";
    os << p << "  \"beta\": " << fmt_g17(cfg.beta) << ",\n";
    os << p << "  \"epsilon0\": " << fmt_g17(cfg.epsilon0) << ",\n";
    os << p << "  \"lambda_min\": " << fmt_g17(cfg.lambda_min) << ",\n";
    os << p << "  \"lambda_max\": " << fmt_g17(cfg.lambda_max) << ",\n";
    os << p << "  \"bc\": \"" << helmholtz::bc_name(cfg.bc) << "\",\n";
    os << p << "  \"points_per_wavelength\": "
       << fmt_g17(cfg.quad.points_per_wavelength) << ",\n";
    os << p << "  \"min_nodes\": " << cfg.quad.min_nodes << ",\n";
    os << p << "  \"lambdas_per_panel\": " << fmt_g17(cfg.quad.lambdas_per_panel)
       << ",\n";
    os << p << "  \"cutoff_rate\": " << fmt_g17(cfg.cutoff.rate) << "\n";
    os << p << "}";
    return os.str();
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string config_hash_hex(const ExperimentConfig& cfg) {
    std::string blob = config_snapshot_json(cfg, "");
    for (const SweepSpec& s : cfg.sweeps) {
        const scaling::RegimeRecipe r = resolved_recipe(cfg, s);
        blob += "|" + s.name + "," + scaling::norm_kind_name(s.kind) + "," +
                regime_name_of(r.tag) + "," + fmt_g17(r.ratio) + "," +
                fmt_g17(r.beta) + "," + helmholtz::bc_name(resolved_bc(cfg, s)) +
                "," + fmt_g17(s.expected_slope) + "," + fmt_g17(s.tolerance) +
                "," + std::to_string(s.max_points);
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(blob)));
    return buf;
}

} // namespace collar::cli
