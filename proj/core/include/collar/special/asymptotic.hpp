#ifndef COLLAR_SPECIAL_ASYMPTOTIC_HPP
#define COLLAR_SPECIAL_ASYMPTOTIC_HPP

#include <complex>

#include "collar/special/airy.hpp"

namespace collar::special {

struct TransitionalOptions {
    double tau_max = 4.0;
    double est_constant = 16.0; // envelope constant for the nu^{-2/3} remainder
    AiryOptions airy;
};

struct TransitionalResult {
    double J = 0.0, Y = 0.0;
    double est_rel_error = 0.0;
};

// J_nu, Y_nu at argument nu + tau nu^{1/3}: leading Airy behaviour in the
// O(nu^{1/3})-wide strip around the turning point.
TransitionalResult transitional_bessel(double nu, double tau,
                                       const TransitionalOptions& opt = {});

struct DebyeOptions {
    double nu_min = 20.0;
    double ratio_min = 0.1; // admissible nu/z window
    double ratio_max = 0.9;
    double est_constant = 0.35; // scales the (1+cot^3 beta)/nu remainder
};

struct DebyeResult {
    std::complex<double> H;
    double est_rel_error = 0.0;
    double phase = 0.0; // nu (tan beta - beta) - pi/4
};

// Oscillatory large-order form of H_nu(z) away from the turning point,
// with cos beta = nu / z.
DebyeResult debye_hankel(double nu, double z, const DebyeOptions& opt = {});

struct LargeArgumentOptions {
    double slope = 10.0, offset = 50.0; // window: z >= slope*nu + offset
    int max_terms = 30;
};

struct LargeArgumentResult {
    std::complex<double> H;
    double est_rel_error = 0.0;
};

// Fixed-order z -> infinity expansion, truncated adaptively at the smallest
// term; est_rel_error reports the first omitted term.
LargeArgumentResult large_argument_hankel(double nu, double z,
                                          const LargeArgumentOptions& opt = {});

} // namespace collar::special

#endif
