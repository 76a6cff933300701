#ifndef COLLAR_SCALING_RAY_HPP
#define COLLAR_SCALING_RAY_HPP

namespace collar::scaling {

// Length of the chord a straight ray at distance `impact` from the origin
// cuts through the collar [1, 1 + lambda^(-alpha)], one-sided:
//   sqrt((1+h)^2 - d^2) - sqrt(1 - d^2)   for d <= 1,  h = lambda^(-alpha).
// A radial ray (d = 0) spends exactly h; a tangent ray (d = 1) spends
// sqrt(2h + h^2) ~ sqrt(2) h^{1/2}; rays missing the collar spend 0.
double ray_sojourn(double alpha, double lambda, double impact);

} // namespace collar::scaling

#endif
