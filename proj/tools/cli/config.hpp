#ifndef COLLAR_CLI_CONFIG_HPP
#define COLLAR_CLI_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "collar/helmholtz/annulus.hpp"
#include "collar/helmholtz/solver.hpp"
#include "collar/scaling/sweep.hpp"

namespace collar::cli {

// Malformed or out-of-range configuration; mapped to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One sweep request from a [sweep NAME] section.  A verdict always cites
// the expected slope and tolerance it judged against, so both are required
// keys.  beta and the boundary condition fall back to the globals unless
// the section pins its own.
struct SweepSpec {
    std::string name;
    scaling::NormKind kind = scaling::NormKind::HankelL2Sq;
    scaling::RegimeRecipe recipe{};
    helmholtz::BoundaryCondition bc = helmholtz::BoundaryCondition::Dirichlet;
    double expected_slope = 0.0;
    double tolerance = 0.0;
    std::size_t max_points = 10; // glancing grid cap after snap filtering
    bool beta_from_global = true;
    bool bc_from_global = true;
};

struct ExperimentConfig {
    double alpha = 0.4;
    double beta = 0.3;
    double epsilon0 = 0.1;
    double lambda_min = 128.0;
    double lambda_max = 8192.0;
    helmholtz::BoundaryCondition bc = helmholtz::BoundaryCondition::Dirichlet;
    std::string out_dir = ".";
    bool plot = false;
    helmholtz::QuadratureOptions quad{};
    helmholtz::CutoffProfile cutoff{};
    std::vector<SweepSpec> sweeps;
};

helmholtz::BoundaryCondition parse_bc(const std::string& text);
scaling::NormKind parse_norm_kind(const std::string& text);
scaling::RegimeTag parse_regime(const std::string& text);
std::string regime_name_of(scaling::RegimeTag tag);

// key = value lines, '#' comments, [sweep NAME] sections; keys before the
// first section are global.  Unknown keys are errors, not warnings.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

// Range checks from the experiment contract: alpha in [0, 2/3), epsilon0
// in (0, 1/2), 1 < lambda_min <= lambda_max, glancing beta in (0, 1).
void validate(const ExperimentConfig& cfg);

// Effective recipe / boundary condition of a sweep after global fallback.
scaling::RegimeRecipe resolved_recipe(const ExperimentConfig& cfg,
                                      const SweepSpec& spec);
helmholtz::BoundaryCondition resolved_bc(const ExperimentConfig& cfg,
                                         const SweepSpec& spec);

// Canonical snapshot of the experiment parameters (output locations and
// plot toggles excluded); hashed into every report so a result can be tied
// back to its exact inputs.
std::string config_snapshot_json(const ExperimentConfig& cfg,
                                 const std::string& indent);
std::uint64_t fnv1a64(std::string_view bytes);
std::string config_hash_hex(const ExperimentConfig& cfg);

} // namespace collar::cli

#endif
