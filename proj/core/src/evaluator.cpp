#include "collar/special/evaluator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "collar/special/half_integer.hpp"

namespace collar::special {
namespace {

void check_finite(const std::complex<double>& v, const char* who) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::overflow_error(std::string(who) + ": value outside double range");
}

bool in_transitional_strip(double nu, double z, const TransitionalOptions& o) {
    return std::abs(z - nu) <= o.tau_max * std::cbrt(nu);
}

bool in_debye_window(double nu, double z, const DebyeOptions& o) {
    const double r = nu / z;
    return nu >= o.nu_min && r >= o.ratio_min && r <= o.ratio_max;
}

} // namespace

bool Order::is_half_integer() const {
    if (nu < 0.5) return false;
    const double m = nu - 0.5;
    return std::abs(m - std::round(m)) < 1e-12;
}

int Order::half_index() const {
    if (!is_half_integer())
        throw std::domain_error("Order: not a half-integer order");
    return static_cast<int>(std::llround(nu - 0.5));
}

std::string_view regime_name(Regime r) {
    switch (r) {
        case Regime::Exact: return "exact";
        case Regime::LargeArgument: return "large_argument";
        case Regime::Debye: return "debye";
        case Regime::Transitional: return "transitional";
        case Regime::UniformAiry: return "uniform_airy";
        case Regime::Series: return "series";
    }
    return "unknown";
}

Regime select_regime(Order nu, double z, const EvalConfig& cfg) {
    if (!(nu.nu >= 0.0))
        throw std::domain_error("select_regime: order must be >= 0");
    if (!(z > 0.0))
        throw std::domain_error("select_regime: argument must be positive");
    if (nu.is_half_integer()) return Regime::Exact;
    if (nu.nu > 0.0 && in_transitional_strip(nu.nu, z, cfg.transitional))
        return Regime::Transitional;
    if (in_debye_window(nu.nu, z, cfg.debye)) return Regime::Debye;
    if (z >= cfg.large_argument.slope * nu.nu + cfg.large_argument.offset)
        return Regime::LargeArgument;
    if (nu.nu >= cfg.uniform.nu_min) return Regime::UniformAiry;
    if (z <= cfg.series.z_max) return Regime::Series;
    throw std::domain_error("select_regime: no evaluation path covers this order/argument");
}

BesselEval evaluate_bessel(Order nu, double z, const EvalConfig& cfg) {
    const Regime regime = select_regime(nu, z, cfg);
    BesselEval out;
    switch (regime) {
        case Regime::Exact: {
            const HalfIntegerEval e = half_integer_bessel(nu.half_index(), z);
            const double est = half_integer_est_rel_error(nu.half_index());
            out.J = {std::complex<double>(e.J.value(), 0.0), est, regime};
            out.Y = {std::complex<double>(e.Y.value(), 0.0), est, regime};
            break;
        }
        case Regime::Transitional: {
            const double tau = (z - nu.nu) / std::cbrt(nu.nu);
            const TransitionalResult t =
                transitional_bessel(nu.nu, tau, cfg.transitional);
            out.J = {std::complex<double>(t.J, 0.0), t.est_rel_error, regime};
            out.Y = {std::complex<double>(t.Y, 0.0), t.est_rel_error, regime};
            break;
        }
        case Regime::Debye: {
            const DebyeResult d = debye_hankel(nu.nu, z, cfg.debye);
            out.J = {std::complex<double>(d.H.real(), 0.0), d.est_rel_error, regime};
            out.Y = {std::complex<double>(d.H.imag(), 0.0), d.est_rel_error, regime};
            break;
        }
        case Regime::LargeArgument: {
            const LargeArgumentResult a =
                large_argument_hankel(nu.nu, z, cfg.large_argument);
            out.J = {std::complex<double>(a.H.real(), 0.0), a.est_rel_error, regime};
            out.Y = {std::complex<double>(a.H.imag(), 0.0), a.est_rel_error, regime};
            break;
        }
        case Regime::UniformAiry: {
            const UniformBesselResult u =
                uniform_bessel(nu.nu, z / nu.nu, cfg.uniform);
            out.J = {std::complex<double>(u.J.value(), 0.0), u.est_rel_error, regime};
            out.Y = {std::complex<double>(u.Y.value(), 0.0), u.est_rel_error, regime};
            break;
        }
        case Regime::Series: {
            const double j = bessel_j_series(nu.nu, z, cfg.series);
            const double est =
                std::max(1e-14, 1e-15 * std::exp(0.95 * std::max(0.0, z - 30.0)));
            out.J = {std::complex<double>(j, 0.0), est, regime};
            // second solution by reflection; integer orders would need the
            // log-form series, which no solver path requires
            const double frac = nu.nu - std::floor(nu.nu);
            if (frac < 1e-9 || frac > 1.0 - 1e-9)
                throw std::domain_error(
                    "evaluate_bessel: Y for integer order has no series path here");
            const double c = std::cos(nu.nu * std::numbers::pi);
            const double s = std::sin(nu.nu * std::numbers::pi);
            const double j_neg = bessel_j_series(-nu.nu, z, cfg.series);
            const double y = (j * c - j_neg) / s;
            out.Y = {std::complex<double>(y, 0.0),
                     est * (2.0 + 2.0 / std::abs(s)), regime};
            break;
        }
    }
    check_finite(out.J.value, "evaluate_bessel(J)");
    check_finite(out.Y.value, "evaluate_bessel(Y)");
    return out;
}

double bessel_y(Order nu, double z, const EvalConfig& cfg) {
    return evaluate_bessel(nu, z, cfg).Y.value.real();
}

double hankel_modulus_sq(Order nu, double z, const EvalConfig& cfg) {
    if (nu.is_half_integer()) {
        const double lg = hankel_modulus_sq_log(nu, z, cfg);
        if (lg > 700.0)
            throw std::overflow_error("hankel_modulus_sq: value exceeds double range");
        return std::exp(lg);
    }
    const BesselEval e = evaluate_bessel(nu, z, cfg);
    return std::norm(std::complex<double>(e.J.value.real(), e.Y.value.real()));
}

double hankel_modulus_sq_log(Order nu, double z, const EvalConfig& cfg) {
    if (nu.is_half_integer())
        return half_integer_bessel(nu.half_index(), z).modulus_sq_log();
    return std::log(hankel_modulus_sq(nu, z, cfg));
}

} // namespace collar::special
