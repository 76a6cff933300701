#ifndef COLLAR_SCALED_HPP
#define COLLAR_SCALED_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace collar {

// Log-scaled reals/complexes for quantities whose magnitude leaves the
// double range (evanescent Bessel factors reach exp(+-10^4) in the
// high-order regime).  Invariant: value = mantissa * exp(log_scale),
// with |mantissa| kept in a moderate band by normalize().

struct ScaledReal {
    double mantissa = 0.0;
    double log_scale = 0.0;

    static ScaledReal from(double v) { return ScaledReal{v, 0.0}; }

    void normalize() {
        if (mantissa == 0.0 || !std::isfinite(mantissa)) { log_scale = 0.0; return; }
        double a = std::fabs(mantissa);
        if (a > 1e100 || a < 1e-100) {
            // an error d in the stored log is a relative error d in the
            // value, so the double rounding of the total goes back into
            // the mantissa instead of being dropped
            const long double total = static_cast<long double>(log_scale) +
                                      std::log(static_cast<long double>(a));
            const double s = static_cast<double>(total);
            mantissa = std::copysign(
                std::exp(static_cast<double>(total - static_cast<long double>(s))),
                mantissa);
            log_scale = s;
        }
    }

    double value() const {
        if (mantissa == 0.0) return 0.0;
        double e = log_scale;
        if (e > 700.0) throw std::overflow_error("ScaledReal: value exceeds double range");
        if (e < -745.0) return 0.0;
        return mantissa * std::exp(e);
    }

    // log|value|; -inf for zero
    double log_abs() const {
        if (mantissa == 0.0) return -std::numeric_limits<double>::infinity();
        return std::log(std::fabs(mantissa)) + log_scale;
    }

    bool is_zero() const { return mantissa == 0.0; }
    int sign() const { return (mantissa > 0) - (mantissa < 0); }

    ScaledReal operator-() const { return {-mantissa, log_scale}; }

    friend ScaledReal operator*(const ScaledReal& a, const ScaledReal& b) {
        ScaledReal r{a.mantissa * b.mantissa, a.log_scale + b.log_scale};
        r.normalize();
        return r;
    }
    friend ScaledReal operator*(const ScaledReal& a, double b) {
        ScaledReal r{a.mantissa * b, a.log_scale};
        r.normalize();
        return r;
    }
    friend ScaledReal operator/(const ScaledReal& a, const ScaledReal& b) {
        if (b.mantissa == 0.0) throw std::domain_error("ScaledReal: division by zero");
        ScaledReal r{a.mantissa / b.mantissa, a.log_scale - b.log_scale};
        r.normalize();
        return r;
    }
    friend ScaledReal operator+(const ScaledReal& a, const ScaledReal& b) {
        if (a.mantissa == 0.0) return b;
        if (b.mantissa == 0.0) return a;
        // fold onto the larger scale; the smaller term may underflow harmlessly
        if (a.log_scale >= b.log_scale) {
            double shift = b.log_scale - a.log_scale;
            ScaledReal r{a.mantissa + b.mantissa * ((shift < -745.0) ? 0.0 : std::exp(shift)),
                         a.log_scale};
            r.normalize();
            return r;
        }
        return b + a;
    }
    friend ScaledReal operator-(const ScaledReal& a, const ScaledReal& b) { return a + (-b); }
};

struct ScaledComplex {
    std::complex<double> mantissa{0.0, 0.0};
    double log_scale = 0.0;

    static ScaledComplex from(std::complex<double> v) { return ScaledComplex{v, 0.0}; }
    static ScaledComplex from_parts(const ScaledReal& re, const ScaledReal& im) {
        if (re.is_zero() && im.is_zero()) return {};
        double base = std::max(re.is_zero() ? -1e308 : re.log_scale,
                               im.is_zero() ? -1e308 : im.log_scale);
        auto lift = [&](const ScaledReal& x) -> double {
            if (x.is_zero()) return 0.0;
            double sh = x.log_scale - base;
            return (sh < -745.0) ? 0.0 : x.mantissa * std::exp(sh);
        };
        ScaledComplex r{{lift(re), lift(im)}, base};
        r.normalize();
        return r;
    }

    void normalize() {
        double a = std::abs(mantissa);
        if (a == 0.0) { log_scale = 0.0; return; }
        if (a > 1e100 || a < 1e-100) {
            // same residual fold as the real case, applied to the modulus;
            // divide by a first: its reciprocal overflows for subnormal a
            const long double total = static_cast<long double>(log_scale) +
                                      std::log(static_cast<long double>(a));
            const double s = static_cast<double>(total);
            mantissa = (mantissa / a) *
                       std::exp(static_cast<double>(total - static_cast<long double>(s)));
            log_scale = s;
        }
    }

    std::complex<double> value() const {
        if (mantissa == std::complex<double>(0.0, 0.0)) return {0.0, 0.0};
        double e = log_scale;
        if (e > 700.0) throw std::overflow_error("ScaledComplex: value exceeds double range");
        if (e < -745.0) return {0.0, 0.0};
        double f = std::exp(e);
        return mantissa * f;
    }

    double log_abs() const {
        double a = std::abs(mantissa);
        if (a == 0.0) return -std::numeric_limits<double>::infinity();
        return std::log(a) + log_scale;
    }

    bool is_zero() const { return mantissa == std::complex<double>(0.0, 0.0); }

    friend ScaledComplex operator*(const ScaledComplex& a, const ScaledComplex& b) {
        ScaledComplex r{a.mantissa * b.mantissa, a.log_scale + b.log_scale};
        r.normalize();
        return r;
    }
    friend ScaledComplex operator*(const ScaledComplex& a, const ScaledReal& b) {
        ScaledComplex r{a.mantissa * b.mantissa, a.log_scale + b.log_scale};
        r.normalize();
        return r;
    }
    friend ScaledComplex operator*(const ScaledComplex& a, std::complex<double> b) {
        ScaledComplex r{a.mantissa * b, a.log_scale};
        r.normalize();
        return r;
    }
    friend ScaledComplex operator/(const ScaledComplex& a, const ScaledComplex& b) {
        if (b.is_zero()) throw std::domain_error("ScaledComplex: division by zero");
        ScaledComplex r{a.mantissa / b.mantissa, a.log_scale - b.log_scale};
        r.normalize();
        return r;
    }
    friend ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.log_scale >= b.log_scale) {
            double shift = b.log_scale - a.log_scale;
            ScaledComplex r{a.mantissa + b.mantissa * ((shift < -745.0) ? 0.0 : std::exp(shift)),
                            a.log_scale};
            r.normalize();
            return r;
        }
        return b + a;
    }
    friend ScaledComplex operator-(const ScaledComplex& a, const ScaledComplex& b) {
        return a + ScaledComplex{-b.mantissa, b.log_scale};
    }
};

} // namespace collar

#endif
