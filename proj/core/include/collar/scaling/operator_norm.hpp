#ifndef COLLAR_SCALING_OPERATOR_NORM_HPP
#define COLLAR_SCALING_OPERATOR_NORM_HPP

#include <vector>

#include "collar/helmholtz/solver.hpp"

namespace collar::scaling {

// Inner product the discretized solve operator acts in. Plain is quadrature
// L²(dr) on the collar; Measure folds the spherical volume factor into the
// weights on both sides.
enum class OperatorWeighting { Plain, Measure };

struct OperatorNormOptions {
    OperatorWeighting weighting = OperatorWeighting::Plain;
    int max_iterations = 1000;
    double tolerance = 1e-12;
};

// Largest singular value of the weighted kernel matrix
//   K_ik = sqrt(w_i) G(r_i, s_k) chi(s_k) s_k^2 sqrt(w_k)
// (Plain weighting), i.e. the L2(collar) -> L2(collar) norm of
// f -> solve_mode(f). Power iteration on K*K with a fixed deterministic
// start vector; throws if the matrix fails to materialize finitely.
double mode_operator_norm(helmholtz::ModeIndex mode, double lambda,
                          const helmholtz::AnnulusSpec& spec,
                          helmholtz::BoundaryCondition bc =
                              helmholtz::BoundaryCondition::Dirichlet,
                          const OperatorNormOptions& opt = {});

// max of mode_operator_norm over a mode list
double worst_mode_norm(const std::vector<int>& ls, double lambda,
                       const helmholtz::AnnulusSpec& spec,
                       helmholtz::BoundaryCondition bc =
                           helmholtz::BoundaryCondition::Dirichlet,
                       const OperatorNormOptions& opt = {});

} // namespace collar::scaling

#endif
