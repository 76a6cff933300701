#ifndef COLLAR_HELMHOLTZ_DIAGNOSTICS_HPP
#define COLLAR_HELMHOLTZ_DIAGNOSTICS_HPP

#include "collar/helmholtz/solver.hpp"

namespace collar::helmholtz {

// Independent finite-difference checks of a computed mode solution.  The
// stencil values come from a refined composite rule whose panel breaks
// include each probe radius (the kernel is only C^0 across s = r, so the
// production rule's answer is not smooth enough to difference); forcing is
// re-expanded off-grid by per-panel polynomial interpolation.  This probes
// the whole chain (kernel, reflection coefficient, quadrature), not the
// stored samples.
struct ResidualOptions {
    int pde_sample_count = 24; // interior radii probed by the PDE stencil
    double stencil_factor = 60.0; // stencil step = 1/(factor * lambda)
};

struct ModeResiduals {
    double boundary = 0.0; // |w(1)| / (||f||_inf lambda^{-1-alpha}); Dirichlet
    double neumann = 0.0;  // |w'(1)| / (lambda ||w||_inf); Neumann
    double pde = 0.0;      // max |L w - chi f| / (lambda^2 ||w||_inf + ||f||_inf)
};

// Boundary-value residual of the Dirichlet solve, relative to the natural
// solution scale ||f||_inf lambda^{-1-alpha}.
double dirichlet_boundary_residual(ModeIndex mode, double lambda,
                                   const RadialGridFunction& f,
                                   const AnnulusSpec& spec);

// One-sided 5-point derivative at r = 1 of the Neumann solve, relative to
// lambda * ||w||_inf.
double neumann_derivative_residual(ModeIndex mode, double lambda,
                                   const RadialGridFunction& f,
                                   const AnnulusSpec& spec,
                                   const ResidualOptions& opt = {});

// Max over interior sample radii of |w'' + (2/r) w' + (lambda^2 - mu^2/r^2) w
// - chi f|, relative to lambda^2 ||w||_inf + ||f||_inf, derivatives by
// central 5-point stencils on a refinement.
double pde_residual(ModeIndex mode, double lambda, const RadialGridFunction& f,
                    const AnnulusSpec& spec, BoundaryCondition bc,
                    const ResidualOptions& opt = {});

ModeResiduals compute_residuals(ModeIndex mode, double lambda,
                                const RadialGridFunction& f,
                                const AnnulusSpec& spec,
                                const ResidualOptions& opt = {});

} // namespace collar::helmholtz

#endif
