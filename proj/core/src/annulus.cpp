#include "collar/helmholtz/annulus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace collar::helmholtz {

GaussRule gauss_legendre(int n) {
    if (n < 1) throw std::domain_error("gauss_legendre: order must be >= 1");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-based seed, then Newton on P_n
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x; // roots found from the +1 end; store ascending
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

double CutoffProfile::shape(double t) const {
    const double a = std::abs(t);
    if (a <= 0.5) return 1.0;
    if (a >= 1.0) return 0.0;
    const double g = 2.0 * (a - 0.5); // position inside the glue interval
    const double b0 = std::exp(-rate / (1.0 - g));
    const double b1 = std::exp(-rate / g);
    return b0 / (b0 + b1);
}

double AnnulusSpec::width() const { return std::pow(lambda, -alpha); }

double AnnulusSpec::chi(double r) const {
    return cutoff.shape(std::pow(lambda, alpha) * (r - 1.0));
}

AnnulusSpec AnnulusSpec::build(double alpha, double lambda,
                               const QuadratureOptions& opt,
                               const CutoffProfile& cutoff) {
    if (!(alpha >= 0.0) || !(alpha < 2.0 / 3.0))
        throw std::domain_error("AnnulusSpec: alpha must lie in [0, 2/3)");
    if (!(lambda >= 1.0))
        throw std::domain_error("AnnulusSpec: lambda must be >= 1");
    AnnulusSpec spec;
    spec.alpha = alpha;
    spec.lambda = lambda;
    spec.cutoff = cutoff;
    const double oscillations = std::pow(lambda, 1.0 - alpha);
    const int panels =
        std::max(1, static_cast<int>(std::ceil(oscillations / opt.lambdas_per_panel)));
    const int n_target = std::max(
        opt.min_nodes,
        static_cast<int>(std::ceil(opt.points_per_wavelength * oscillations)));
    const int per_panel = (n_target + panels - 1) / panels;
    spec.panel_count = panels;
    spec.per_panel = per_panel;
    const GaussRule rule = gauss_legendre(per_panel);
    const double h = spec.width() / panels;
    spec.nodes.reserve(static_cast<std::size_t>(panels) * per_panel);
    spec.weights.reserve(spec.nodes.capacity());
    for (int p = 0; p < panels; ++p) {
        const double left = 1.0 + p * h;
        for (int i = 0; i < per_panel; ++i) {
            spec.nodes.push_back(left + 0.5 * h * (rule.nodes[i] + 1.0));
            spec.weights.push_back(0.5 * h * rule.weights[i]);
        }
    }
    return spec;
}

RadialGridFunction RadialGridFunction::zeros(const AnnulusSpec& spec) {
    RadialGridFunction f;
    f.r = spec.nodes;
    f.values.assign(spec.nodes.size(), {0.0, 0.0});
    return f;
}

RadialGridFunction RadialGridFunction::sample(const AnnulusSpec& spec,
                                              const std::complex<double>* data,
                                              std::size_t n) {
    if (n != spec.nodes.size())
        throw std::invalid_argument("RadialGridFunction: sample count does not match the grid");
    RadialGridFunction f;
    f.r = spec.nodes;
    f.values.assign(data, data + n);
    return f;
}

PanelInterpolant::PanelInterpolant(const AnnulusSpec& spec,
                                   const RadialGridFunction& f) {
    if (spec.panel_count < 1 || spec.per_panel < 1)
        throw std::invalid_argument("PanelInterpolant: spec lacks its panel layout");
    if (f.values.size() != spec.nodes.size())
        throw std::invalid_argument("PanelInterpolant: data is not sampled on the spec grid");
    panel_count_ = spec.panel_count;
    per_panel_ = spec.per_panel;
    panel_h_ = spec.width() / panel_count_;
    values_ = f.values;
    const GaussRule ref = gauss_legendre(per_panel_);
    ref_nodes_ = ref.nodes;
    bary_.resize(ref_nodes_.size());
    for (std::size_t i = 0; i < bary_.size(); ++i) {
        // barycentric weights for Gauss-Legendre points are
        // (-1)^i sqrt((1-x_i^2) w_i) up to a common factor
        const double x = ref_nodes_[i];
        bary_[i] = std::sqrt((1.0 - x * x) * ref.weights[i]);
        if (i % 2 == 1) bary_[i] = -bary_[i];
    }
}

std::complex<double> PanelInterpolant::operator()(double s) const {
    int p = static_cast<int>((s - 1.0) / panel_h_);
    p = std::max(0, std::min(p, panel_count_ - 1));
    const double left = 1.0 + p * panel_h_;
    const double t = 2.0 * (s - left) / panel_h_ - 1.0;
    const std::complex<double>* vals =
        values_.data() + static_cast<std::size_t>(p) * per_panel_;
    std::complex<double> num{0.0, 0.0};
    double den = 0.0;
    for (int i = 0; i < per_panel_; ++i) {
        const double d = t - ref_nodes_[i];
        if (d == 0.0) return vals[i];
        const double c = bary_[i] / d;
        num += c * vals[i];
        den += c;
    }
    return num / den;
}

} // namespace collar::helmholtz
