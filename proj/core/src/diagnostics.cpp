#include "collar/helmholtz/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace collar::helmholtz {
namespace {

double sup_abs(const std::vector<std::complex<double>>& v) {
    double m = 0.0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    return m;
}

// Solution re-evaluated through a refined composite rule whose breakpoints
// include the evaluation radius.  The kernel's radial derivative break at
// s = r then sits on a panel edge, so every panel integrand is analytic and
// the value is smooth in r; FD stencils applied to it see the continuum
// solution, not the ripple of the production grid.
class RefinedEvaluator {
public:
    RefinedEvaluator(ModeIndex mode, double lambda, const RadialGridFunction& f,
                     const AnnulusSpec& spec, BoundaryCondition bc)
        : ctx_(ModeContext::make(mode, lambda, bc)), spec_(spec),
          interp_(spec, f), sub_(gauss_legendre(std::max(12, spec.per_panel))) {
        const double w = spec.width();
        const int cells = spec.panel_count * 2; // double the production density
        edges_.reserve(cells + 2);
        for (int j = 0; j <= cells; ++j) edges_.push_back(1.0 + j * w / cells);
    }

    std::complex<double> operator()(double r) const {
        std::vector<double> edges = edges_;
        if (r > edges.front() && r < edges.back()) {
            edges.push_back(r);
            std::sort(edges.begin(), edges.end());
        }
        ScaledComplex acc;
        for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
            const double a = edges[e], b = edges[e + 1];
            if (!(b - a > 0.0)) continue;
            for (std::size_t i = 0; i < sub_.nodes.size(); ++i) {
                const double s = a + 0.5 * (b - a) * (sub_.nodes[i] + 1.0);
                const double cut = spec_.chi(s);
                if (cut == 0.0) continue;
                const double wq = 0.5 * (b - a) * sub_.weights[i];
                const std::complex<double> load = interp_(s) * (cut * s * s * wq);
                acc = acc + green_kernel_scaled(ctx_, r, s) * ScaledComplex::from(load);
            }
        }
        return acc.value();
    }

private:
    ModeContext ctx_;
    const AnnulusSpec& spec_;
    PanelInterpolant interp_;
    GaussRule sub_;
    std::vector<double> edges_;
};

} // namespace

double dirichlet_boundary_residual(ModeIndex mode, double lambda,
                                   const RadialGridFunction& f,
                                   const AnnulusSpec& spec) {
    const double fsup = sup_abs(f.values);
    if (fsup == 0.0) return 0.0;
    const std::complex<double> w1 = solve_mode_at(
        mode, lambda, f, spec, BoundaryCondition::Dirichlet, 1.0);
    const double scale = fsup * std::pow(lambda, -1.0 - spec.alpha);
    return std::abs(w1) / scale;
}

double neumann_derivative_residual(ModeIndex mode, double lambda,
                                   const RadialGridFunction& f,
                                   const AnnulusSpec& spec,
                                   const ResidualOptions& opt) {
    const double fsup = sup_abs(f.values);
    if (fsup == 0.0) return 0.0;
    const RefinedEvaluator eval(mode, lambda, f, spec,
                                BoundaryCondition::Neumann);
    const double h = 1.0 / (opt.stencil_factor * lambda);
    std::complex<double> w[5];
    for (int j = 0; j < 5; ++j) w[j] = eval(1.0 + j * h);
    const std::complex<double> d1 =
        (-25.0 * w[0] + 48.0 * w[1] - 36.0 * w[2] + 16.0 * w[3] - 3.0 * w[4]) /
        (12.0 * h);
    const RadialGridFunction wh =
        solve_mode(mode, lambda, f, spec, BoundaryCondition::Neumann);
    const double wsup = sup_abs(wh.values);
    if (wsup == 0.0) return 0.0;
    return std::abs(d1) / (lambda * wsup);
}

double pde_residual(ModeIndex mode, double lambda, const RadialGridFunction& f,
                    const AnnulusSpec& spec, BoundaryCondition bc,
                    const ResidualOptions& opt) {
    const double h = 1.0 / (opt.stencil_factor * lambda);
    const RadialGridFunction w = solve_mode(mode, lambda, f, spec, bc);
    const double wsup = sup_abs(w.values);
    const double fsup = sup_abs(f.values);
    const double scale = lambda * lambda * wsup + fsup;
    if (scale == 0.0) return 0.0;

    const RefinedEvaluator eval(mode, lambda, f, spec, bc);
    // probe at actual grid nodes so chi*f needs no interpolation; stencils
    // must not cross r = 1
    const std::size_t n = spec.nodes.size();
    const std::size_t stride = std::max<std::size_t>(1, n / opt.pde_sample_count);
    double worst = 0.0;
    for (std::size_t k = 0; k < n; k += stride) {
        const double r = spec.nodes[k];
        if (r - 2.0 * h <= 1.0) continue;
        std::complex<double> u[5];
        for (int j = -2; j <= 2; ++j) u[j + 2] = eval(r + j * h);
        const std::complex<double> d2 =
            (-u[0] + 16.0 * u[1] - 30.0 * u[2] + 16.0 * u[3] - u[4]) /
            (12.0 * h * h);
        const std::complex<double> d1 =
            (u[0] - 8.0 * u[1] + 8.0 * u[3] - u[4]) / (12.0 * h);
        const std::complex<double> lw =
            d2 + 2.0 / r * d1 +
            (lambda * lambda - mode.mu_sq() / (r * r)) * u[2];
        const std::complex<double> rhs = spec.chi(r) * f.values[k];
        worst = std::max(worst, std::abs(lw - rhs));
    }
    return worst / scale;
}

ModeResiduals compute_residuals(ModeIndex mode, double lambda,
                                const RadialGridFunction& f,
                                const AnnulusSpec& spec,
                                const ResidualOptions& opt) {
    ModeResiduals res;
    res.boundary = dirichlet_boundary_residual(mode, lambda, f, spec);
    res.neumann = neumann_derivative_residual(mode, lambda, f, spec, opt);
    res.pde = std::max(
        pde_residual(mode, lambda, f, spec, BoundaryCondition::Dirichlet, opt),
        pde_residual(mode, lambda, f, spec, BoundaryCondition::Neumann, opt));
    return res;
}

} // namespace collar::helmholtz
