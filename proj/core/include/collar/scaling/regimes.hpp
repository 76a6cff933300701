#ifndef COLLAR_SCALING_REGIMES_HPP
#define COLLAR_SCALING_REGIMES_HPP

#include <string>

#include "collar/helmholtz/solver.hpp"

namespace collar::scaling {

enum class RegimeTag { Transversal, Glancing, Elliptic };

std::string regime_tag_name(RegimeTag tag);

// Three-way split of (nu, lambda) by the ratio nu/lambda. Glancing carries
// the window exponent beta with |1 - nu/lambda| = lambda^(-beta).
struct RegimeLabel {
    RegimeTag tag = RegimeTag::Transversal;
    double epsilon0 = 0.1;
    double beta = 0.0;
};

// Total for epsilon0 in (0, 1/2): Transversal iff nu/lambda <= 1 - epsilon0,
// Elliptic iff nu/lambda >= 1 + epsilon0, Glancing otherwise with
// beta = -log(|1 - nu/lambda|) / log(lambda) (infinite at the exact turning
// point nu = lambda).
RegimeLabel classify_regime(helmholtz::ModeIndex mode, double lambda,
                            double epsilon0);

// Nearest admissible order nu = l + 1/2 to a real target, with the snap
// distance. Sweeps over continuous-order families must go through this and
// apply their own drop threshold.
struct SnappedOrder {
    int l = 0;
    double nu = 0.5;
    double err = 0.0;
};

SnappedOrder snap_half_integer(double nu_target);

} // namespace collar::scaling

#endif
