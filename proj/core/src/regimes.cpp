#include "collar/scaling/regimes.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace collar::scaling {

std::string regime_tag_name(RegimeTag tag) {
    switch (tag) {
    case RegimeTag::Transversal: return "transversal";
    case RegimeTag::Glancing: return "glancing";
    case RegimeTag::Elliptic: return "elliptic";
    }
    return "unknown";
}

RegimeLabel classify_regime(helmholtz::ModeIndex mode, double lambda,
                            double epsilon0) {
    if (!(epsilon0 > 0.0 && epsilon0 < 0.5))
        throw std::invalid_argument("classify_regime: epsilon0 outside (0, 1/2)");
    if (!(lambda > 1.0))
        throw std::invalid_argument("classify_regime: lambda must exceed 1");
    RegimeLabel label;
    label.epsilon0 = epsilon0;
    const double ratio = mode.nu() / lambda;
    if (ratio <= 1.0 - epsilon0) {
        label.tag = RegimeTag::Transversal;
    } else if (ratio >= 1.0 + epsilon0) {
        label.tag = RegimeTag::Elliptic;
    } else {
        label.tag = RegimeTag::Glancing;
        const double gap = std::abs(1.0 - ratio);
        label.beta = gap == 0.0 ? std::numeric_limits<double>::infinity()
                                : -std::log(gap) / std::log(lambda);
    }
    return label;
}

SnappedOrder snap_half_integer(double nu_target) {
    SnappedOrder s;
    const double m = std::round(nu_target - 0.5);
    s.l = std::max(0, static_cast<int>(m));
    s.nu = s.l + 0.5;
    s.err = std::abs(s.nu - nu_target);
    return s;
}

} // namespace collar::scaling
