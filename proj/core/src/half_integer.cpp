#include "collar/special/half_integer.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace collar::special {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRescaleLimit = 1e250;
constexpr double kLogRescale = 575.6462732485114210; // log(1e250)

// The recurrences run in long double: the claimed accuracy envelope is a
// few 1e-15 while the double paths lose up to two extra digits to step
// rounding over ~1000 iterations at m = 400.
//
// log_scale hygiene matters as much as mantissa precision here.  A value
// materializes as mantissa * exp(log_scale), so an absolute error d in a
// stored log costs relative error d; log(x) of a ~600-sized quantity is
// only good to ~5e-14 absolute in double.  Scales are therefore built
// solely from (a) exact multiples of kLogRescale and (b) long double
// prefactor logs whose double-rounding residual is folded back into the
// mantissa.

// band-normalize a long double working value against the rescale constant
ScaledReal make_scaled(long double v, double log_base) {
    if (v == 0.0L) return ScaledReal{0.0, 0.0};
    while (std::fabs(v) > 1e260L) {
        v /= kRescaleLimit;
        log_base += kLogRescale;
    }
    while (std::fabs(v) < 1e-260L) {
        v *= kRescaleLimit;
        log_base -= kLogRescale;
    }
    return ScaledReal{static_cast<double>(v), log_base};
}

// value = mant * exp(L): round L to double and push the residual into the
// mantissa so no precision hides in the scale
ScaledReal from_log_parts(long double mant, long double L) {
    if (mant == 0.0L) return ScaledReal{0.0, 0.0};
    const double S = static_cast<double>(L);
    return ScaledReal{static_cast<double>(mant * std::exp(L - static_cast<long double>(S))), S};
}

// log((2n+1)!!) through (2n+1)! = (2n+1)!! 2^n n!
long double log_double_factorial_odd(int n) {
    return std::lgamma(2.0L * n + 2.0L) - n * 0.69314718055994530942L -
           std::lgamma(n + 1.0L);
}

struct OrderPair {
    ScaledReal lo, hi; // spherical orders m and m+1
};

// Maclaurin branch, z < 1/2.  Term ratio -z^2/2 / ((k+1)(2n+2k+3)); no
// cancellation at this argument size.
ScaledReal spherical_j_series(int n, double z) {
    const long double x = -0.5L * static_cast<long double>(z) * z;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 0; k < 40; ++k) {
        term *= x / ((k + 1.0L) * (2.0L * n + 2.0L * k + 3.0L));
        sum += term;
        if (std::fabs(term) < 1e-21L * std::fabs(sum)) break;
    }
    return from_log_parts(sum, n * std::log(static_cast<long double>(z)) -
                                   log_double_factorial_odd(n));
}

ScaledReal spherical_y_series(int n, double z) {
    const long double x = -0.5L * static_cast<long double>(z) * z;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 0; k < 40; ++k) {
        term *= x / ((k + 1.0L) * (2.0L * (k - n) + 1.0L));
        sum += term;
        if (std::fabs(term) < 1e-21L * std::fabs(sum)) break;
    }
    const long double log_df = (n == 0) ? 0.0L : log_double_factorial_odd(n - 1);
    return from_log_parts(-sum,
                          log_df - (n + 1) * std::log(static_cast<long double>(z)));
}

// j is the recessive solution for n > z, so upward recurrence is only used
// while every order stays inside the oscillatory region.
OrderPair spherical_j_upward(int m, double z) {
    const long double zl = z;
    long double prev = std::sin(zl) / zl;
    long double cur = prev / zl - std::cos(zl) / zl;
    if (m == 0) return {make_scaled(prev, 0.0), make_scaled(cur, 0.0)};
    long double lo = cur;
    for (int n = 1; n < m + 1; ++n) {
        const long double nxt = (2.0L * n + 1.0L) / zl * cur - prev;
        prev = cur;
        cur = nxt;
        if (n + 1 == m) lo = cur;
    }
    return {make_scaled(lo, 0.0), make_scaled(cur, 0.0)};
}

// Miller's algorithm: run the three-term recurrence downward from a start
// order safely above m, then normalize against j_0 (or j_1 when sin z is
// small).  Working values are rescaled whenever they pass 1e250; each
// recorded sample keeps the log of the rescale factor active at record time.
OrderPair spherical_j_miller(int m, double z) {
    const int start =
        m + 40 +
        static_cast<int>(std::ceil(10.0 * std::cbrt(std::max(z, double(m)))));
    const long double zl = z;
    long double above = 0.0L, cur = 1.0L;
    double log_shift = 0.0;
    long double rec_lo = 0.0L, rec_hi = 0.0L;
    double rec_lo_log = 0.0, rec_hi_log = 0.0;
    for (int n = start; n >= 1; --n) {
        const long double below = (2.0L * n + 1.0L) / zl * cur - above;
        above = cur;
        cur = below;
        if (n - 1 == m + 1) {
            rec_hi = cur;
            rec_hi_log = log_shift;
        }
        if (n - 1 == m) {
            rec_lo = cur;
            rec_lo_log = log_shift;
        }
        if (std::fabs(cur) > kRescaleLimit) {
            cur /= kRescaleLimit;
            above /= kRescaleLimit;
            log_shift += kLogRescale;
        }
    }
    // cur now holds the unnormalized j_0, above the unnormalized j_1.
    long double ref_true, ref_raw;
    const long double s = std::sin(zl);
    if (std::fabs(s) >= 0.35L) {
        ref_true = s / zl;
        ref_raw = cur;
    } else {
        ref_true = s / (zl * zl) - std::cos(zl) / zl;
        ref_raw = above;
    }
    const long double ratio = ref_true / ref_raw;
    return {make_scaled(rec_lo * ratio, rec_lo_log - log_shift),
            make_scaled(rec_hi * ratio, rec_hi_log - log_shift)};
}

OrderPair spherical_j_pair(int m, double z) {
    if (z < 0.5)
        return {spherical_j_series(m, z), spherical_j_series(m + 1, z)};
    if (m + 1 < z - 2.0 * std::cbrt(z) - 2.0) return spherical_j_upward(m, z);
    return spherical_j_miller(m, z);
}

// y is dominant as the order grows, so upward recurrence is always stable;
// only rescaling is needed once values climb past 1e250.
OrderPair spherical_y_pair(int m, double z) {
    if (z < 0.5)
        return {spherical_y_series(m, z), spherical_y_series(m + 1, z)};
    const long double zl = z;
    const long double c = std::cos(zl), s = std::sin(zl);
    long double prev = -c / zl;
    long double cur = -c / (zl * zl) - s / zl;
    if (m == 0) return {make_scaled(prev, 0.0), make_scaled(cur, 0.0)};
    double log_shift = 0.0;
    long double lo = cur;
    double lo_log = 0.0;
    for (int n = 1; n < m + 1; ++n) {
        const long double nxt = (2.0L * n + 1.0L) / zl * cur - prev;
        prev = cur;
        cur = nxt;
        if (n + 1 == m) {
            lo = cur;
            lo_log = log_shift;
        }
        if (std::fabs(cur) > kRescaleLimit) {
            cur /= kRescaleLimit;
            prev /= kRescaleLimit;
            log_shift += kLogRescale;
        }
    }
    return {make_scaled(lo, lo_log), make_scaled(cur, log_shift)};
}

} // namespace

double HalfIntegerEval::modulus_sq_log() const {
    return (J * J + Y * Y).log_abs();
}

HalfIntegerEval half_integer_bessel(int m, double z) {
    if (m < 0)
        throw std::domain_error("half_integer_bessel: order index m must be >= 0");
    if (!(z > 0.0) || !std::isfinite(z))
        throw std::domain_error("half_integer_bessel: argument must be positive and finite");
    const OrderPair j = spherical_j_pair(m, z);
    const OrderPair y = spherical_y_pair(m, z);
    const ScaledReal to_cyl(std::sqrt(2.0 * z / kPi));
    const double nu = m + 0.5;
    HalfIntegerEval out;
    out.J = to_cyl * j.lo;
    out.Y = to_cyl * y.lo;
    const ScaledReal j_next = to_cyl * j.hi;
    const ScaledReal y_next = to_cyl * y.hi;
    const ScaledReal ratio(nu / z);
    out.Jp = ratio * out.J - j_next;
    out.Yp = ratio * out.Y - y_next;
    return out;
}

std::complex<double> hankel_polynomial_route(int m, std::complex<double> z) {
    if (m < 0 || m > 60)
        throw std::domain_error("hankel_polynomial_route: supported for 0 <= m <= 60");
    if (z == std::complex<double>(0.0, 0.0))
        throw std::domain_error("hankel_polynomial_route: argument must be nonzero");
    const std::complex<double> w = std::complex<double>(0.0, 1.0) / z;
    std::complex<double> term(1.0, 0.0), sum(1.0, 0.0), comp(0.0, 0.0);
    for (int k = 1; k <= m; ++k) {
        term *= w * ((m + k) * (m - k + 1.0) / (2.0 * k));
        const std::complex<double> y = term - comp;
        const std::complex<double> t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    // (-i)^{m+1} cycles with period 4
    static const std::complex<double> kQuarterTurns[4] = {
        {1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
    const std::complex<double> phase = kQuarterTurns[(m + 1) % 4];
    const std::complex<double> value =
        std::sqrt(2.0 / (kPi * z)) * phase * std::exp(std::complex<double>(0.0, 1.0) * z) * sum;
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
        throw std::overflow_error("hankel_polynomial_route: value outside double range");
    return value;
}

std::complex<double> spherical_hankel_exact(int m, std::complex<double> z) {
    if (z.imag() == 0.0) {
        if (!(z.real() > 0.0))
            throw std::domain_error("spherical_hankel_exact: real argument must be positive");
        return half_integer_bessel(m, z.real()).H().value();
    }
    return hankel_polynomial_route(m, z);
}

ScaledComplex spherical_hankel_scaled(int m, double z) {
    return half_integer_bessel(m, z).H();
}

double half_integer_est_rel_error(int m) {
    return 1e-15 * (8.0 + 0.05 * m);
}

} // namespace collar::special
