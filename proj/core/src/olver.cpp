#include "collar/special/olver.hpp"

#include <cmath>
#include <stdexcept>

namespace collar::special {
namespace {

// S(u) = sum_{k>=0} u^k/(2k+3) on |u| <= 1/2, so that the turning-point
// integrals on both sides collapse to (2/3)|zeta|^{3/2} = |u|^{3/2} S(u).
double cancellation_free_sum(double u) {
    double sum = 1.0 / 3.0, p = 1.0;
    for (int k = 1; k < 80; ++k) {
        p *= u;
        const double term = p / (2.0 * k + 3.0);
        sum += term;
        if (std::abs(term) < 1e-18 * sum) break;
    }
    return sum;
}

void check_z(double z) {
    if (!(z > 0.0) || !std::isfinite(z))
        throw std::domain_error("olver_zeta: argument must be positive and finite");
}

} // namespace

double olver_zeta_ratio(double z) {
    check_z(z);
    const double u = (1.0 - z) * (1.0 + z);
    if (std::abs(u) <= 0.5)
        return std::pow(1.5 * cancellation_free_sum(u), 2.0 / 3.0);
    if (z < 1.0) {
        const double w = std::sqrt(u);
        const double f = std::log((1.0 + w) / z) - w;
        return std::pow(1.5 * f, 2.0 / 3.0) / u;
    }
    const double g = std::sqrt(-u) - std::acos(1.0 / z);
    return std::pow(1.5 * g, 2.0 / 3.0) / (-u);
}

double olver_zeta(double z) {
    check_z(z);
    const double u = (1.0 - z) * (1.0 + z);
    return u * olver_zeta_ratio(z);
}

UniformBesselResult uniform_bessel(double nu, double z_scaled,
                                   const UniformOptions& opt) {
    if (!(nu >= opt.nu_min))
        throw std::domain_error("uniform_bessel: order below the uniform-regime threshold");
    if (!(z_scaled > 0.0) || !std::isfinite(z_scaled))
        throw std::domain_error("uniform_bessel: scaled argument must be positive and finite");
    const double zeta = olver_zeta(z_scaled);
    const double ratio = olver_zeta_ratio(z_scaled);
    const double amp = std::pow(4.0 * ratio, 0.25) / std::cbrt(nu);
    const double airy_arg = std::cbrt(nu) * std::cbrt(nu) * zeta;
    const ScaledAiryPair ab = airy_scaled(airy_arg, opt.airy);
    UniformBesselResult out;
    out.J = ab.Ai * amp;
    out.Y = -(ab.Bi * amp);
    out.est_rel_error = opt.est_constant / nu;
    return out;
}

} // namespace collar::special
