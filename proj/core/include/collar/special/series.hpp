#ifndef COLLAR_SPECIAL_SERIES_HPP
#define COLLAR_SPECIAL_SERIES_HPP

#include <cmath>
#include <stdexcept>

namespace collar::special {

// Double-double value (Dekker/Knuth error-free transforms).  The ascending
// Bessel series loses ~z * log10(e) digits to cancellation, so both the
// running term and the accumulator must carry a compensation limb for the
// oracle to stay trustworthy through the default z budget.
struct DoubleDouble {
    double hi = 0.0, lo = 0.0;

    static DoubleDouble two_sum(double a, double b) {
        const double s = a + b;
        const double bb = s - a;
        return {s, (a - (s - bb)) + (b - bb)};
    }

    void add(double x) {
        DoubleDouble s = two_sum(hi, x);
        s.lo += lo;
        const DoubleDouble r = two_sum(s.hi, s.lo);
        hi = r.hi;
        lo = r.lo;
    }

    void add(const DoubleDouble& x) {
        add(x.hi);
        add(x.lo);
    }

    DoubleDouble times(double c) const {
        const double p = hi * c;
        const double e = std::fma(hi, c, -p) + lo * c;
        return two_sum(p, e);
    }

    // exact-remainder division; d must carry no rounding of its own, or the
    // per-term perturbations decorrelate and the cancellation budget is lost
    DoubleDouble div(double d) const {
        const double p = hi / d;
        const double r = std::fma(-p, d, hi);
        const double e = (r + lo) / d;
        return two_sum(p, e);
    }

    double result() const { return hi + lo; }
};

struct SeriesOptions {
    double z_max = 60.0; // convergence budget; beyond it the cancellation
                         // exceeds what the compensated arithmetic absorbs
    int max_terms = 400;
};

// Ascending series J_nu(z) = (z/2)^nu / Gamma(nu+1) * sum_k (-1)^k
// (z/2)^{2k} / (k! (nu+1)_k).  Slow but independent of every recurrence
// and asymptotic path; used as the cross-check oracle at moderate z.
// Negative non-integer orders are allowed (needed by the Y reflection
// formula); negative integers hit Gamma poles and are rejected.
inline double bessel_j_series(double nu, double z, const SeriesOptions& opt = {}) {
    if (nu < 0.0 && std::abs(nu - std::round(nu)) < 1e-12)
        throw std::domain_error("bessel_j_series: negative integer order");
    if (!(z >= 0.0)) throw std::domain_error("bessel_j_series: argument must be >= 0");
    if (z > opt.z_max)
        throw std::domain_error("bessel_j_series: argument exceeds series budget");
    if (z == 0.0) return (nu == 0.0) ? 1.0 : 0.0;
    const double q = 0.25 * z * z;
    DoubleDouble acc{1.0, 0.0};
    DoubleDouble term{1.0, 0.0};
    for (int k = 1; k <= opt.max_terms; ++k) {
        // k and nu+k are exact doubles, so both divisions stay error-free
        // in the compensated limb; a fused -q/(k(nu+k)) factor would not
        term = term.times(-q).div(static_cast<double>(k)).div(nu + k);
        acc.add(term);
        if (std::abs(term.hi) < 1e-40 * (1.0 + std::abs(acc.hi))) break;
    }
    // Gamma(nu+1) < 0 exactly on (-2,-1), (-4,-3), ...
    const double gamma_sign =
        (nu >= -1.0 || (static_cast<long long>(std::floor(nu + 1.0)) % 2 == 0))
            ? 1.0
            : -1.0;
    const double log_pref = nu * std::log(0.5 * z) - std::lgamma(nu + 1.0);
    return gamma_sign * acc.result() * std::exp(log_pref);
}

} // namespace collar::special

#endif
