#ifndef COLLAR_HELMHOLTZ_SOLVER_HPP
#define COLLAR_HELMHOLTZ_SOLVER_HPP

#include <complex>
#include <vector>

#include "collar/scaled.hpp"
#include "collar/helmholtz/annulus.hpp"

namespace collar::helmholtz {

// Spherical-harmonic mode label; the radial operator sees mu^2 = l(l+1)
// and the Bessel order nu = l + 1/2, with nu^2 - mu^2 = 1/4 exactly.
struct ModeIndex {
    int l = 0;
    double mu_sq() const { return static_cast<double>(l) * (l + 1.0); }
    double nu() const { return l + 0.5; }
};

enum class BoundaryCondition { Dirichlet, Neumann };

// Boundary data of one mode at fixed lambda, shared by every kernel entry:
// rho is the reflection coefficient that enforces the boundary condition
// on the inner branch J - rho H.
struct ModeContext {
    int l = 0;
    double lambda = 0.0;
    BoundaryCondition bc = BoundaryCondition::Dirichlet;
    ScaledComplex H_boundary;  // H_nu(lambda)
    ScaledComplex rho;

    static ModeContext make(ModeIndex mode, double lambda, BoundaryCondition bc);
};

// Outgoing Green kernel of the radial operator
//   L_nu = d^2/dr^2 + (2/r) d/dr + (lambda^2 - mu^2/r^2)
// on r >= 1: G(r,s) = (pi/2i) (rs)^{-1/2} [J - rho H](lambda s_<) H(lambda s_>).
// The scaled form never overflows, including far above the turning point.
ScaledComplex green_kernel_scaled(const ModeContext& ctx, double r, double s);
std::complex<double> green_kernel(ModeIndex mode, double r, double s,
                                  double lambda,
                                  BoundaryCondition bc = BoundaryCondition::Dirichlet);

// w(r) = integral over the collar of G(r,s) chi(s) f(s) s^2 ds by the spec
// quadrature; output sampled on the spec nodes.
RadialGridFunction solve_mode(ModeIndex mode, double lambda,
                              const RadialGridFunction& f,
                              const AnnulusSpec& spec, BoundaryCondition bc);
RadialGridFunction solve_mode_dirichlet(ModeIndex mode, double lambda,
                                        const RadialGridFunction& f,
                                        const AnnulusSpec& spec);
RadialGridFunction solve_mode_neumann(ModeIndex mode, double lambda,
                                      const RadialGridFunction& f,
                                      const AnnulusSpec& spec);

// Same solution evaluated at one arbitrary radius (residual stencils sample
// off-grid points).
std::complex<double> solve_mode_at(ModeIndex mode, double lambda,
                                   const RadialGridFunction& f,
                                   const AnnulusSpec& spec,
                                   BoundaryCondition bc, double r);

// Outgoing solution of the homogeneous problem with boundary value
// boundary_coeff: w(r) = boundary_coeff r^{-1/2} H_nu(lambda r)/H_nu(lambda).
std::complex<double> homogeneous_mode(ModeIndex mode, double lambda,
                                      std::complex<double> boundary_coeff,
                                      double r);

} // namespace collar::helmholtz

#endif
