#ifndef COLLAR_SCALING_MEASURES_HPP
#define COLLAR_SCALING_MEASURES_HPP

#include "collar/helmholtz/annulus.hpp"

namespace collar::scaling {

// Collar L² norms built from exact half-integer evaluations on the spec's
// quadrature grid. The grid resolution is enforced at AnnulusSpec::build
// time, so these trust the spec they are given.

// integral over [1, 1+lambda^(-alpha)] of |H_{l+1/2}(lambda r)|^2 dr
double annulus_l2_sq(int l, double lambda, const helmholtz::AnnulusSpec& spec);

// log of the same integral; stays finite deep in the elliptic range where
// the Hankel modulus overflows double
double annulus_l2_sq_log(int l, double lambda,
                         const helmholtz::AnnulusSpec& spec);

// |H_{l+1/2}(lambda)|^2 at the boundary radius
double boundary_modulus_sq(int l, double lambda);
double boundary_modulus_sq_log(int l, double lambda);

// L² norm over the collar of J(lambda s)Y(lambda) - J(lambda)Y(lambda s),
// the part of the kernel that switches sign at s = 1
double cross_term_l2(int l, double lambda, const helmholtz::AnnulusSpec& spec);

// L² norm of the Dirichlet solve against the constant load f = 1
double solution_l2(int l, double lambda, const helmholtz::AnnulusSpec& spec);

} // namespace collar::scaling

#endif
