#include "collar/special/airy.hpp"

#include <cmath>
#include <numbers>

namespace collar::special {
namespace {

// Ai(0), -Ai'(0), sqrt(3) to long-double precision
constexpr long double kC1 = 0.355028053887817239260063186004183176L;
constexpr long double kC2 = 0.258819403792806798405183560189469735L;
constexpr long double kSqrt3 = 1.732050807568877293527446341505872367L;
constexpr double kSqrtPi = 1.772453850905516027298167483341145183;

struct MaclaurinPair {
    long double f, g; // the two solutions f(0)=1, g'(0)=1
};

// Both power series run in long double: c1*f and c2*g agree to ~exp(2 xi)
// at the switch point and the difference is Ai.
MaclaurinPair airy_maclaurin(double x) {
    const long double x3 = static_cast<long double>(x) * x * x;
    long double tf = 1.0L, f = 1.0L;
    long double tg = x, g = x;
    for (int k = 0; k < 60; ++k) {
        tf *= x3 / ((3.0L * k + 2.0L) * (3.0L * k + 3.0L));
        tg *= x3 / ((3.0L * k + 3.0L) * (3.0L * k + 4.0L));
        f += tf;
        g += tg;
        if (std::abs(tf) < 1e-24L * std::abs(f) &&
            std::abs(tg) < 1e-24L * (std::abs(g) + 1e-30L))
            break;
    }
    return {f, g};
}

double next_u_factor(int k) {
    return (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
           (216.0 * k * (2.0 * k - 1.0));
}

// sum_k s^k u_k / xi^k truncated at the smallest term
double u_series(double xi, double s) {
    double term = 1.0, sum = 1.0, prev = 1.0;
    for (int k = 1; k < 60; ++k) {
        term *= s * next_u_factor(k) / xi;
        if (std::abs(term) >= std::abs(prev)) break;
        sum += term;
        prev = term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

struct OscillatorySums {
    double P, Q; // even / odd u_k sub-series with alternating signs
};

OscillatorySums u_series_split(double xi) {
    double term = 1.0, prev = 1.0;
    double P = 1.0, Q = 0.0;
    for (int k = 1; k < 60; ++k) {
        term *= next_u_factor(k) / xi;
        if (std::abs(term) >= std::abs(prev)) break;
        const double signed_term = ((k / 2) % 2 == 0) ? term : -term;
        if (k % 2 == 0)
            P += signed_term;
        else
            Q += signed_term;
        prev = term;
        if (std::abs(term) < 1e-18) break;
    }
    return {P, Q};
}

} // namespace

ScaledAiryPair airy_scaled(double x, const AiryOptions& opt) {
    if (std::abs(x) <= opt.x_switch) {
        const MaclaurinPair s = airy_maclaurin(x);
        const double ai = static_cast<double>(kC1 * s.f - kC2 * s.g);
        const double bi = static_cast<double>(kSqrt3 * (kC1 * s.f + kC2 * s.g));
        return {ScaledReal{ai, 0.0}, ScaledReal{bi, 0.0}};
    }
    if (x > 0.0) {
        const double xi = (2.0 / 3.0) * x * std::sqrt(x);
        const double amp = 1.0 / (kSqrtPi * std::pow(x, 0.25));
        ScaledReal ai{0.5 * amp * u_series(xi, -1.0), -xi};
        ScaledReal bi{amp * u_series(xi, 1.0), xi};
        ai.normalize();
        bi.normalize();
        return {ai, bi};
    }
    const double t = -x;
    const double xi = (2.0 / 3.0) * t * std::sqrt(t);
    const double amp = 1.0 / (kSqrtPi * std::pow(t, 0.25));
    const OscillatorySums s = u_series_split(xi);
    const double c = std::cos(xi - 0.25 * std::numbers::pi);
    const double sn = std::sin(xi - 0.25 * std::numbers::pi);
    return {ScaledReal{amp * (c * s.P + sn * s.Q), 0.0},
            ScaledReal{amp * (-sn * s.P + c * s.Q), 0.0}};
}

AiryPair airy(double x, const AiryOptions& opt) {
    const ScaledAiryPair s = airy_scaled(x, opt);
    return {s.Ai.value(), s.Bi.value()};
}

double airy_est_rel_error(double x, const AiryOptions& opt) {
    const double a = std::abs(x);
    if (a <= opt.x_switch) {
        // long-double cancellation floor between the two Maclaurin solutions
        const double cancel = std::exp((4.0 / 3.0) * a * std::sqrt(a)) * 1e-19;
        return std::max(1e-14, cancel);
    }
    // optimal-truncation floor of the asymptotic series, plus the ulp the
    // xi = (2/3)x^{3/2} argument of exp/sin loses before the series starts
    const double xi = (2.0 / 3.0) * a * std::sqrt(a);
    return std::max(1e-14, 2.0 * std::exp(-2.0 * xi));
}

} // namespace collar::special
