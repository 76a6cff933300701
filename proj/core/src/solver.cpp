#include "collar/helmholtz/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "collar/special/half_integer.hpp"

namespace collar::helmholtz {
namespace {

using special::HalfIntegerEval;
using special::half_integer_bessel;

constexpr std::complex<double> kPrefactor{0.0, -0.5 * std::numbers::pi}; // pi/(2i)

// J - rho H on the inner branch, as a scaled complex
ScaledComplex inner_solution(const ModeContext& ctx, const HalfIntegerEval& e) {
    const ScaledComplex J = ScaledComplex::from_parts(e.J, ScaledReal{});
    return J - ctx.rho * e.H();
}

void check_grid(const RadialGridFunction& f, const AnnulusSpec& spec) {
    if (f.values.size() != spec.nodes.size())
        throw std::invalid_argument("solve_mode: forcing is not sampled on the spec grid");
}

// Integral of basis(s) chi(s) F(s) s^{3/2} over [a, b] by a local rule.
// Used for the two pieces of the panel containing an evaluation radius;
// the kernel's derivative break at s = r then sits on a piece boundary and
// each piece integrand is analytic.
ScaledComplex half_panel_integral(const ModeContext& ctx, const AnnulusSpec& spec,
                                  const PanelInterpolant& F, const GaussRule& sub,
                                  double a, double b, bool inner_side) {
    ScaledComplex acc;
    if (!(b - a > 0.0)) return acc;
    for (std::size_t i = 0; i < sub.nodes.size(); ++i) {
        const double s = a + 0.5 * (b - a) * (sub.nodes[i] + 1.0);
        const double cut = spec.chi(s);
        if (cut == 0.0) continue;
        const double wq = 0.5 * (b - a) * sub.weights[i];
        const std::complex<double> c = F(s) * (cut * s * std::sqrt(s) * wq);
        if (c == std::complex<double>(0.0, 0.0)) continue;
        const HalfIntegerEval e = half_integer_bessel(ctx.l, ctx.lambda * s);
        const ScaledComplex basis = inner_side ? inner_solution(ctx, e) : e.H();
        acc = acc + basis * ScaledComplex::from(c);
    }
    return acc;
}

} // namespace

ModeContext ModeContext::make(ModeIndex mode, double lambda, BoundaryCondition bc) {
    if (!(lambda > 0.0))
        throw std::domain_error("ModeContext: lambda must be positive");
    const HalfIntegerEval b = half_integer_bessel(mode.l, lambda);
    ModeContext ctx;
    ctx.l = mode.l;
    ctx.lambda = lambda;
    ctx.bc = bc;
    ctx.H_boundary = b.H();
    if (bc == BoundaryCondition::Dirichlet) {
        ctx.rho = ScaledComplex::from_parts(b.J, ScaledReal{}) / b.H();
    } else {
        // d/dr [r^{-1/2} C(lambda r)] = 0 at r = 1 forces
        // rho = (lambda J' - J/2) / (lambda H' - H/2)
        const ScaledReal lam{lambda, 0.0};
        const ScaledReal half{0.5, 0.0};
        const ScaledComplex num = ScaledComplex::from_parts(
            lam * b.Jp - half * b.J, ScaledReal{});
        const ScaledComplex den = ScaledComplex::from_parts(
            lam * b.Jp - half * b.J, lam * b.Yp - half * b.Y);
        ctx.rho = num / den;
    }
    return ctx;
}

ScaledComplex green_kernel_scaled(const ModeContext& ctx, double r, double s) {
    if (!(r >= 1.0) || !(s >= 1.0))
        throw std::domain_error("green_kernel: both radii must be >= 1");
    const double lo = std::min(r, s), hi = std::max(r, s);
    const HalfIntegerEval elo = half_integer_bessel(ctx.l, ctx.lambda * lo);
    const HalfIntegerEval ehi =
        (hi == lo) ? elo : half_integer_bessel(ctx.l, ctx.lambda * hi);
    ScaledComplex g = inner_solution(ctx, elo) * ehi.H();
    g = g * ScaledReal{1.0 / std::sqrt(r * s), 0.0};
    return g * kPrefactor;
}

std::complex<double> green_kernel(ModeIndex mode, double r, double s,
                                  double lambda, BoundaryCondition bc) {
    const ModeContext ctx = ModeContext::make(mode, lambda, bc);
    return green_kernel_scaled(ctx, r, s).value();
}

RadialGridFunction solve_mode(ModeIndex mode, double lambda,
                              const RadialGridFunction& f,
                              const AnnulusSpec& spec, BoundaryCondition bc) {
    check_grid(f, spec);
    const std::size_t n = spec.nodes.size();
    const ModeContext ctx = ModeContext::make(mode, lambda, bc);
    const PanelInterpolant F(spec, f);
    const GaussRule sub = gauss_legendre(std::max(12, spec.per_panel));
    const int P = spec.panel_count, m = spec.per_panel;
    const double panel_h = spec.width() / P;

    std::vector<ScaledComplex> inner(n), outer(n);
    for (std::size_t k = 0; k < n; ++k) {
        const HalfIntegerEval e = half_integer_bessel(mode.l, lambda * spec.nodes[k]);
        inner[k] = inner_solution(ctx, e);
        outer[k] = e.H();
    }

    // The kernel is only C^0 across s = r, so a straight Nystrom sum leaves
    // a derivative kink at every node and its at-node values stall near
    // 1e-4 relative.  Complete panels strictly left or right of r_i have
    // analytic integrands and keep the production rule (panel prefix and
    // suffix sums make that part O(n)); the panel containing r_i is redone
    // with a rule split at r_i.
    std::vector<ScaledComplex> load(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = spec.nodes[k];
        const std::complex<double> c =
            f.values[k] * (spec.chi(s) * s * std::sqrt(s) * spec.weights[k]);
        load[k] = ScaledComplex::from(c);
    }

    std::vector<ScaledComplex> pre(P), suf(P); // panels strictly before / after
    {
        ScaledComplex acc;
        for (int p = 0; p < P; ++p) {
            pre[p] = acc;
            for (int k = p * m; k < (p + 1) * m; ++k) acc = acc + inner[k] * load[k];
        }
        acc = ScaledComplex{};
        for (int p = P; p-- > 0;) {
            suf[p] = acc;
            for (int k = (p + 1) * m; k-- > p * m;) acc = acc + outer[k] * load[k];
        }
    }

    RadialGridFunction w = RadialGridFunction::zeros(spec);
    for (std::size_t i = 0; i < n; ++i) {
        const int p = static_cast<int>(i) / m;
        const double left = 1.0 + p * panel_h;
        const double right = 1.0 + (p + 1) * panel_h;
        const double r = spec.nodes[i];
        const ScaledComplex below =
            pre[p] + half_panel_integral(ctx, spec, F, sub, left, r, true);
        const ScaledComplex above =
            suf[p] + half_panel_integral(ctx, spec, F, sub, r, right, false);
        ScaledComplex sum = outer[i] * below + inner[i] * above;
        sum = sum * ScaledReal{1.0 / std::sqrt(r), 0.0};
        w.values[i] = (sum * kPrefactor).value();
    }
    return w;
}

RadialGridFunction solve_mode_dirichlet(ModeIndex mode, double lambda,
                                        const RadialGridFunction& f,
                                        const AnnulusSpec& spec) {
    return solve_mode(mode, lambda, f, spec, BoundaryCondition::Dirichlet);
}

RadialGridFunction solve_mode_neumann(ModeIndex mode, double lambda,
                                      const RadialGridFunction& f,
                                      const AnnulusSpec& spec) {
    return solve_mode(mode, lambda, f, spec, BoundaryCondition::Neumann);
}

std::complex<double> solve_mode_at(ModeIndex mode, double lambda,
                                   const RadialGridFunction& f,
                                   const AnnulusSpec& spec,
                                   BoundaryCondition bc, double r) {
    check_grid(f, spec);
    if (!(r >= 1.0))
        throw std::domain_error("solve_mode_at: radius must be >= 1");
    const ModeContext ctx = ModeContext::make(mode, lambda, bc);
    const PanelInterpolant F(spec, f);
    const GaussRule sub = gauss_legendre(std::max(12, spec.per_panel));
    const int P = spec.panel_count, m = spec.per_panel;
    const double panel_h = spec.width() / P;
    const double top = 1.0 + P * panel_h;

    // same splitting as solve_mode: complete panels by the production rule,
    // the panel containing r by a rule split at r
    ScaledComplex below, above; // against inner (s < r) / outer (s > r)
    const auto add_panel = [&](int p, bool inner_side, ScaledComplex& acc) {
        for (int k = p * m; k < (p + 1) * m; ++k) {
            const double s = spec.nodes[k];
            const std::complex<double> c =
                f.values[k] * (spec.chi(s) * s * std::sqrt(s) * spec.weights[k]);
            if (c == std::complex<double>(0.0, 0.0)) continue;
            const HalfIntegerEval e = half_integer_bessel(mode.l, lambda * s);
            acc = acc + (inner_side ? inner_solution(ctx, e) : e.H()) *
                            ScaledComplex::from(c);
        }
    };
    if (r >= top) {
        for (int p = 0; p < P; ++p) add_panel(p, true, below);
    } else if (r <= 1.0) {
        for (int p = 0; p < P; ++p) add_panel(p, false, above);
    } else {
        const int pc = std::clamp(static_cast<int>((r - 1.0) / panel_h), 0, P - 1);
        for (int p = 0; p < pc; ++p) add_panel(p, true, below);
        for (int p = pc + 1; p < P; ++p) add_panel(p, false, above);
        below = below + half_panel_integral(ctx, spec, F, sub,
                                            1.0 + pc * panel_h, r, true);
        above = above + half_panel_integral(ctx, spec, F, sub, r,
                                            1.0 + (pc + 1) * panel_h, false);
    }

    const HalfIntegerEval er = half_integer_bessel(mode.l, lambda * r);
    ScaledComplex sum = er.H() * below + inner_solution(ctx, er) * above;
    sum = sum * ScaledReal{1.0 / std::sqrt(r), 0.0};
    return (sum * kPrefactor).value();
}

std::complex<double> homogeneous_mode(ModeIndex mode, double lambda,
                                      std::complex<double> boundary_coeff,
                                      double r) {
    if (!(r >= 1.0))
        throw std::domain_error("homogeneous_mode: radius must be >= 1");
    if (!(lambda > 0.0))
        throw std::domain_error("homogeneous_mode: lambda must be positive");
    const ScaledComplex at_r = special::spherical_hankel_scaled(mode.l, lambda * r);
    const ScaledComplex at_1 = special::spherical_hankel_scaled(mode.l, lambda);
    const ScaledComplex ratio = at_r / at_1;
    return boundary_coeff / std::sqrt(r) * ratio.value();
}

} // namespace collar::helmholtz
