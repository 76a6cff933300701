#ifndef COLLAR_SPECIAL_OLVER_HPP
#define COLLAR_SPECIAL_OLVER_HPP

#include "collar/scaled.hpp"
#include "collar/special/airy.hpp"

namespace collar::special {

// The turning-point variable zeta(z): (2/3) zeta^{3/2} = log((1+sqrt(1-z^2))/z)
// - sqrt(1-z^2) for z <= 1, (2/3)(-zeta)^{3/2} = sqrt(z^2-1) - arccos(1/z)
// for z >= 1.  Near z = 1 both closed forms cancel badly, so a single
// series in u = 1 - z^2 is used for |u| <= 1/2; it is smooth across the
// turning point and gives zeta(1) = 0 exactly.
double olver_zeta(double z);

// zeta / (1 - z^2), computed without the removable singularity at z = 1;
// tends to 2^{-2/3} there.
double olver_zeta_ratio(double z);

struct UniformBesselResult {
    ScaledReal J, Y;
    double est_rel_error = 0.0;
};

struct UniformOptions {
    double nu_min = 20.0;
    double est_constant = 0.1; // claimed first-correction envelope ~ C/nu
    AiryOptions airy;
};

// J_nu(nu z) and Y_nu(nu z) through the Airy-uniform representation,
// valid through the turning point z = 1.  Scaled return: deep in the
// evanescent region J underflows double while Y overflows.
UniformBesselResult uniform_bessel(double nu, double z_scaled,
                                   const UniformOptions& opt = {});

} // namespace collar::special

#endif
