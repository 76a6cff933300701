#include "collar/scaling/sweep.hpp"

#include <cmath>
#include <future>
#include <sstream>
#include <stdexcept>

#include "collar/scaling/measures.hpp"

namespace collar::scaling {
namespace {

double target_order(const RegimeRecipe& recipe, double lambda) {
    switch (recipe.tag) {
    case RegimeTag::Transversal:
    case RegimeTag::Elliptic:
        return recipe.ratio * lambda;
    case RegimeTag::Glancing:
        return lambda * (1.0 - std::pow(lambda, -recipe.beta));
    }
    return lambda;
}

double measure(NormKind kind, int l, double lambda, double alpha,
               const SweepOptions& opt) {
    if (kind == NormKind::HankelModulusSqAtBoundary)
        return boundary_modulus_sq(l, lambda);
    const helmholtz::AnnulusSpec spec =
        helmholtz::AnnulusSpec::build(alpha, lambda, opt.quad, opt.cutoff);
    switch (kind) {
    case NormKind::HankelL2Sq:
        return annulus_l2_sq(l, lambda, spec);
    case NormKind::CrossTermL2:
        return cross_term_l2(l, lambda, spec);
    case NormKind::OperatorNorm:
        return mode_operator_norm(helmholtz::ModeIndex{l}, lambda, spec,
                                  opt.bc, opt.op);
    case NormKind::SolutionNorm:
        return solution_l2(l, lambda, spec);
    default:
        throw std::logic_error("sweep_and_fit: unhandled norm kind");
    }
}

[[noreturn]] void abort_at(double lambda, const std::string& why) {
    std::ostringstream os;
    os << "sweep_and_fit: measurement at lambda=" << lambda << " " << why;
    throw std::runtime_error(os.str());
}

} // namespace

std::string norm_kind_name(NormKind kind) {
    switch (kind) {
    case NormKind::HankelL2Sq: return "hankel_l2_sq";
    case NormKind::HankelModulusSqAtBoundary: return "hankel_modulus_sq_at_boundary";
    case NormKind::CrossTermL2: return "cross_term_l2";
    case NormKind::OperatorNorm: return "operator_norm";
    case NormKind::SolutionNorm: return "solution_norm";
    }
    return "unknown";
}

LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("fit_line: need >= 2 matched points");
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    for (std::size_t i = 0; i < xs.size(); ++i)
        fit.max_residual = std::max(
            fit.max_residual,
            std::abs(ys[i] - (fit.intercept + fit.slope * xs[i])));
    return fit;
}

std::vector<double> dyadic_lambda_grid(double lambda_min, double lambda_max) {
    if (!(lambda_min > 1.0) || !(lambda_max >= lambda_min) ||
        !std::isfinite(lambda_max))
        throw std::invalid_argument(
            "dyadic_lambda_grid: need 1 < lambda_min <= lambda_max < inf");
    const int k_lo = static_cast<int>(std::ceil(std::log2(lambda_min) - 1e-12));
    const int k_hi = static_cast<int>(std::floor(std::log2(lambda_max) + 1e-12));
    std::vector<double> grid;
    for (int k = k_lo; k <= k_hi; ++k) grid.push_back(std::ldexp(1.0, k));
    return grid;
}

std::vector<double> glancing_lambda_grid(double lambda_min, double lambda_max,
                                         double beta, std::size_t max_points) {
    if (!(lambda_min > 1.0) || !(lambda_max >= lambda_min) ||
        !std::isfinite(lambda_max))
        throw std::invalid_argument(
            "glancing_lambda_grid: need 1 < lambda_min <= lambda_max < inf");
    if (!(beta > 0.0) || !(beta < 1.0))
        throw std::invalid_argument("glancing_lambda_grid: beta must lie in (0, 1)");
    if (max_points < 2)
        throw std::invalid_argument("glancing_lambda_grid: max_points must be >= 2");

    const double e_lo = std::log2(lambda_min);
    const int steps =
        static_cast<int>(std::floor((std::log2(lambda_max) - e_lo) * 64.0 + 1e-9));
    std::vector<double> kept;
    for (int k = 0; k <= steps; ++k) {
        const double lam = std::pow(2.0, e_lo + k / 64.0);
        const double nu_t = lam * (1.0 - std::pow(lam, -beta));
        if (snap_half_integer(nu_t).err < std::pow(lam, -beta) / 10.0)
            kept.push_back(lam);
    }
    if (kept.size() <= max_points) return kept;

    // even thinning by index; the spacing ratio exceeds 1 so picks are distinct
    std::vector<double> out;
    out.reserve(max_points);
    const double step = static_cast<double>(kept.size() - 1) /
                        static_cast<double>(max_points - 1);
    for (std::size_t i = 0; i < max_points; ++i)
        out.push_back(kept[static_cast<std::size_t>(
            std::llround(static_cast<double>(i) * step))]);
    return out;
}

SweepResult sweep_and_fit(NormKind kind, const RegimeRecipe& recipe,
                          double alpha, const std::vector<double>& lambdas,
                          const SweepOptions& opt) {
    if (lambdas.size() < 5)
        throw std::invalid_argument("sweep_and_fit: need >= 5 grid points");
    for (std::size_t i = 1; i < lambdas.size(); ++i)
        if (!(lambdas[i] > lambdas[i - 1]))
            throw std::invalid_argument("sweep_and_fit: grid must be sorted ascending");

    // resolve the order targets up front; glancing points whose half-integer
    // snap is too coarse are dropped before any measurement runs
    std::vector<SweepPoint> plan;
    for (double lambda : lambdas) {
        SweepPoint p;
        p.lambda = lambda;
        p.nu_target = target_order(recipe, lambda);
        const SnappedOrder snap = snap_half_integer(p.nu_target);
        p.l = snap.l;
        p.snap_err = snap.err;
        if (recipe.tag == RegimeTag::Glancing &&
            snap.err >= std::pow(lambda, -recipe.beta) / 10.0)
            continue;
        plan.push_back(p);
    }
    if (plan.size() < 5)
        throw std::runtime_error(
            "sweep_and_fit: fewer than 5 usable points after glancing snap drops");

    auto run_point = [&](SweepPoint p) {
        p.measurement = measure(kind, p.l, p.lambda, alpha, opt);
        return p;
    };

    SweepResult result;
    result.kind = kind;
    result.alpha = alpha;
    result.recipe = recipe;
    result.points.resize(plan.size());
    if (opt.parallel) {
        std::vector<std::future<SweepPoint>> futs;
        futs.reserve(plan.size());
        for (const SweepPoint& p : plan)
            futs.push_back(std::async(std::launch::async, run_point, p));
        for (std::size_t i = 0; i < futs.size(); ++i) {
            try {
                result.points[i] = futs[i].get();
            } catch (const std::exception& e) {
                abort_at(plan[i].lambda, std::string("failed: ") + e.what());
            }
        }
    } else {
        for (std::size_t i = 0; i < plan.size(); ++i) {
            try {
                result.points[i] = run_point(plan[i]);
            } catch (const std::exception& e) {
                abort_at(plan[i].lambda, std::string("failed: ") + e.what());
            }
        }
    }

    std::vector<double> xs, ys;
    xs.reserve(result.points.size());
    ys.reserve(result.points.size());
    for (const SweepPoint& p : result.points) {
        if (!(p.measurement > 0.0) || !std::isfinite(p.measurement))
            abort_at(p.lambda, "is not a positive finite value");
        xs.push_back(std::log(p.lambda));
        ys.push_back(std::log(p.measurement));
    }
    const LineFit fit = fit_line(xs, ys);
    result.fitted_slope = fit.slope;
    result.intercept = fit.intercept;
    result.max_residual = fit.max_residual;
    return result;
}

} // namespace collar::scaling
