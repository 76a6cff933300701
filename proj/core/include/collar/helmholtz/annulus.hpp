#ifndef COLLAR_HELMHOLTZ_ANNULUS_HPP
#define COLLAR_HELMHOLTZ_ANNULUS_HPP

#include <complex>
#include <vector>

namespace collar::helmholtz {

// Gauss-Legendre rule of order n on [-1, 1] (Newton iteration on the
// Legendre recurrence; deterministic).
struct GaussRule {
    std::vector<double> nodes, weights;
};
GaussRule gauss_legendre(int n);

// Smooth bump: 1 on [-1/2, 1/2], 0 outside (-1, 1), glued by the standard
// exp(-rate/u) partition step.  rate selects among admissible profiles;
// the scaling laws must not care which one is used.
struct CutoffProfile {
    double rate = 1.0;
    double shape(double t) const;
};

struct QuadratureOptions {
    double points_per_wavelength = 10.0;
    int min_nodes = 64;
    double lambdas_per_panel = 4.0; // panel count = ceil(lambda^{1-alpha} / this)
};

// The collar [1, 1 + lambda^{-alpha}] with its composite quadrature and
// cutoff profile.  Node spacing tracks the ~2pi/lambda oscillation of the
// kernels; sum of weights equals the collar width.
struct AnnulusSpec {
    double alpha = 0.0;
    double lambda = 1.0;
    CutoffProfile cutoff{};
    std::vector<double> nodes, weights;
    // composite layout: panel_count uniform panels, per_panel nodes each
    int panel_count = 0;
    int per_panel = 0;

    double width() const;
    double chi(double r) const; // cutoff.shape at t = lambda^alpha (r-1)

    static AnnulusSpec build(double alpha, double lambda,
                             const QuadratureOptions& opt = {},
                             const CutoffProfile& cutoff = {});
};

struct RadialGridFunction {
    std::vector<double> r;
    std::vector<std::complex<double>> values;

    static RadialGridFunction zeros(const AnnulusSpec& spec);
    static RadialGridFunction sample(const AnnulusSpec& spec,
                                     const std::complex<double>* data,
                                     std::size_t n);
};

// Off-node evaluation of a grid function: polynomial interpolation inside
// each quadrature panel, barycentric form on the panel's Gauss-Legendre
// points.  Reproduces node values to rounding; owns a copy of the data.
class PanelInterpolant {
public:
    PanelInterpolant(const AnnulusSpec& spec, const RadialGridFunction& f);
    std::complex<double> operator()(double s) const;

private:
    int panel_count_ = 0, per_panel_ = 0;
    double panel_h_ = 0.0;
    std::vector<std::complex<double>> values_;
    std::vector<double> ref_nodes_, bary_;
};

} // namespace collar::helmholtz

#endif
