#ifndef COLLAR_SCALING_SWEEP_HPP
#define COLLAR_SCALING_SWEEP_HPP

#include <string>
#include <vector>

#include "collar/helmholtz/annulus.hpp"
#include "collar/helmholtz/solver.hpp"
#include "collar/scaling/operator_norm.hpp"
#include "collar/scaling/regimes.hpp"

namespace collar::scaling {

// Which collar measurement a sweep records as a function of lambda.
enum class NormKind {
    HankelL2Sq,
    HankelModulusSqAtBoundary,
    CrossTermL2,
    OperatorNorm,
    SolutionNorm
};

std::string norm_kind_name(NormKind kind);

// How the swept order nu is tied to lambda. Transversal and Elliptic fix
// the ratio nu/lambda; Glancing tracks nu = lambda(1 - lambda^(-beta)).
// The target is snapped to the nearest half-integer; a glancing point whose
// snap distance reaches lambda^(-beta)/10 is dropped.
struct RegimeRecipe {
    RegimeTag tag = RegimeTag::Transversal;
    double ratio = 0.5;
    double beta = 0.3;
};

struct SweepPoint {
    double lambda = 0.0;
    int l = 0;
    double nu_target = 0.0;
    double snap_err = 0.0;
    double measurement = 0.0;
};

struct SweepOptions {
    helmholtz::QuadratureOptions quad{};
    helmholtz::CutoffProfile cutoff{};
    helmholtz::BoundaryCondition bc = helmholtz::BoundaryCondition::Dirichlet;
    OperatorNormOptions op{};
    bool parallel = true;
};

struct SweepResult {
    NormKind kind = NormKind::HankelL2Sq;
    double alpha = 0.0;
    RegimeRecipe recipe{};
    std::vector<SweepPoint> points;
    double fitted_slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0; // worst |log m - fit| over the points
};

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;
};

// Least-squares line through (x_i, y_i); exact on exact affine data.
LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys);

// Powers of two inside [lambda_min, lambda_max], ascending.
std::vector<double> dyadic_lambda_grid(double lambda_min, double lambda_max);

// Frequencies for a glancing sweep. Whole powers of two almost never put
// lambda(1 - lambda^(-beta)) near a half-integer, so the dyadic grid is
// refined to sixty-fourth-octave steps 2^(k/64) and filtered by the snap
// rule; survivors are thinned evenly (keeping both ends) to max_points.
std::vector<double> glancing_lambda_grid(double lambda_min, double lambda_max,
                                         double beta,
                                         std::size_t max_points = 10);

// Runs the measurement at every lambda of a sorted dyadic grid (>= 5 points
// after glancing drops), fans the points out across threads, and fits
// log(measurement) against log(lambda). Throws with the offending lambda if
// any measurement fails or comes back nonpositive.
SweepResult sweep_and_fit(NormKind kind, const RegimeRecipe& recipe,
                          double alpha, const std::vector<double>& lambdas,
                          const SweepOptions& opt = {});

} // namespace collar::scaling

#endif
