#ifndef COLLAR_HELMHOLTZ_BOUNDARY_HPP
#define COLLAR_HELMHOLTZ_BOUNDARY_HPP

#include <complex>
#include <vector>

#include "collar/helmholtz/solver.hpp"

namespace collar::helmholtz {

// Legendre polynomial P_l(x) by the three-term recurrence.
double legendre_p(int l, double x);

// Axisymmetric boundary data as Legendre coefficients:
// f(theta) = sum_l c_l P_l(cos theta).
struct BoundaryData {
    std::vector<std::complex<double>> legendre_coeffs; // index l
    int l_max() const { return static_cast<int>(legendre_coeffs.size()) - 1; }
};

// Angles theta_i = acos(x_i) of the n-point Gauss-Legendre rule; sample the
// boundary data here before calling expand_boundary.
std::vector<double> boundary_sample_angles(int n);

// Project samples taken at the Gauss-Legendre angles theta_i = acos(x_i)
// of the rule with sample_count points: c_l = (2l+1)/2 sum w_i f_i P_l(x_i).
// Exact for polynomial data of degree <= 2*samples - 1 - l.
BoundaryData expand_boundary(const std::vector<std::complex<double>>& samples,
                             int l_max);

struct SynthesisResult {
    std::complex<double> value;
    double tail_bound = 0.0; // sum of |c_l| over truncated modes
    int l_used = 0;
};

// Field with boundary value f on the unit sphere, evaluated at (r, theta):
// sum_l c_l P_l(cos theta) r^{-1/2} H_nu(lambda r)/H_nu(lambda), truncated
// once the remaining coefficients can no longer matter (cap at 4 lambda:
// higher modes are evanescent and their transfer ratio is < 1).
SynthesisResult synthesize(const BoundaryData& boundary, double lambda,
                           double r, double theta);

} // namespace collar::helmholtz

#endif
