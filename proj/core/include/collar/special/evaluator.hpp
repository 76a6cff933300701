#ifndef COLLAR_SPECIAL_EVALUATOR_HPP
#define COLLAR_SPECIAL_EVALUATOR_HPP

#include <complex>
#include <string_view>

#include "collar/scaled.hpp"
#include "collar/special/asymptotic.hpp"
#include "collar/special/olver.hpp"
#include "collar/special/series.hpp"

namespace collar::special {

struct Order {
    double nu = 0.0;

    // exact half-integers are the sphere's spectrum and get the closed form
    bool is_half_integer() const;
    int half_index() const; // m with nu = m + 1/2; throws otherwise
};

enum class Regime {
    Exact,
    LargeArgument,
    Debye,
    Transitional,
    UniformAiry,
    Series,
};

std::string_view regime_name(Regime r);

struct EvalResult {
    std::complex<double> value{0.0, 0.0};
    double est_rel_error = 0.0;
    Regime regime_used = Regime::Exact;
};

struct EvalConfig {
    TransitionalOptions transitional{};
    DebyeOptions debye{};
    LargeArgumentOptions large_argument{};
    UniformOptions uniform{};
    SeriesOptions series{};
};

struct BesselEval {
    EvalResult J, Y;
};

// Deterministic regime dispatch.  Half-integer orders always take the
// closed form; other orders try, in order: transitional strip, Debye
// window, fixed-order large argument, uniform Airy, ascending series.
// Total for half-integer orders; otherwise a gap raises domain_error.
BesselEval evaluate_bessel(Order nu, double z, const EvalConfig& cfg = {});

Regime select_regime(Order nu, double z, const EvalConfig& cfg = {});

double bessel_y(Order nu, double z, const EvalConfig& cfg = {});

// |H_nu(z)|^2 = J^2 + Y^2; throws overflow_error once the value leaves the
// double range (deep elliptic callers use the log form).
double hankel_modulus_sq(Order nu, double z, const EvalConfig& cfg = {});
double hankel_modulus_sq_log(Order nu, double z, const EvalConfig& cfg = {});

} // namespace collar::special

#endif
