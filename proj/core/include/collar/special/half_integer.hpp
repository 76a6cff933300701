#ifndef COLLAR_SPECIAL_HALF_INTEGER_HPP
#define COLLAR_SPECIAL_HALF_INTEGER_HPP

#include <complex>

#include "collar/scaled.hpp"

namespace collar::special {

// Cylindrical Bessel functions of half-integer order nu = m + 1/2, evaluated
// through the spherical closed forms.  This is the reference ("exact")
// evaluator for the whole library: every asymptotic path is validated
// against it.  Values are log-scaled because J decays and Y grows like
// exp(-+ nu) deep in the evanescent regime nu >> z.
struct HalfIntegerEval {
    ScaledReal J, Y;    // J_{m+1/2}(z), Y_{m+1/2}(z)
    ScaledReal Jp, Yp;  // d/dz of the same

    ScaledComplex H() const { return ScaledComplex::from_parts(J, Y); }
    ScaledComplex Hp() const { return ScaledComplex::from_parts(Jp, Yp); }
    double modulus_sq_log() const;  // log(J^2 + Y^2)
};

// m >= 0, z > 0.  Throws std::domain_error otherwise.
HalfIntegerEval half_integer_bessel(int m, double z);

// H_{m+1/2}(z) = sqrt(2/(pi z)) e^{iz} p_m(z) / z^m with p_m the reverse
// Bessel polynomial; supports complex z (principal branch).  The explicit
// coefficient sum is used for m <= 60 (compensated summation); beyond that
// the coefficients overflow and real arguments fall back to the recurrence
// route.  Throws std::domain_error for z = 0 or unsupported (m, z) combos,
// std::overflow_error if the value leaves the double range.
std::complex<double> spherical_hankel_exact(int m, std::complex<double> z);

// Same value for real z, any m, no overflow: used by the solver internals.
ScaledComplex spherical_hankel_scaled(int m, double z);

// Coefficient-sum route in isolation (m <= 60); exposed so tests can pit the
// two independent evaluations against each other.
std::complex<double> hankel_polynomial_route(int m, std::complex<double> z);

// Roundoff envelope claimed for the recurrence route.
double half_integer_est_rel_error(int m);

} // namespace collar::special

#endif
