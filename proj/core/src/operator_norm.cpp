#include "collar/scaling/operator_norm.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "collar/special/half_integer.hpp"

namespace collar::scaling {
namespace {

using helmholtz::AnnulusSpec;
using helmholtz::BoundaryCondition;
using helmholtz::ModeContext;
using helmholtz::ModeIndex;
using special::HalfIntegerEval;
using collar::ScaledComplex;
using collar::ScaledReal;

constexpr std::complex<double> kPrefactor{0.0, -0.5 * std::numbers::pi};

// Dense weighted kernel matrix, row-major. Built from per-node cached
// Bessel factors so the cost is n evaluations plus n^2 products.
std::vector<std::complex<double>> build_matrix(ModeIndex mode, double lambda,
                                               const AnnulusSpec& spec,
                                               BoundaryCondition bc,
                                               OperatorWeighting weighting) {
    const std::size_t n = spec.nodes.size();
    const ModeContext ctx = ModeContext::make(mode, lambda, bc);

    std::vector<ScaledComplex> inner(n), outer(n);
    for (std::size_t k = 0; k < n; ++k) {
        const HalfIntegerEval e =
            special::half_integer_bessel(mode.l, lambda * spec.nodes[k]);
        outer[k] = e.H();
        inner[k] = ScaledComplex::from_parts(e.J, ScaledReal{}) - ctx.rho * e.H();
    }

    std::vector<double> row_w(n), col_w(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = spec.nodes[k];
        const double sw = std::sqrt(spec.weights[k]);
        if (weighting == OperatorWeighting::Plain) {
            row_w[k] = sw;
            col_w[k] = spec.chi(s) * s * s * sw;
        } else {
            row_w[k] = s * sw;
            col_w[k] = spec.chi(s) * s * sw;
        }
    }

    std::vector<std::complex<double>> m(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const double ri = spec.nodes[i];
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t lo = std::min(i, k), hi = std::max(i, k);
            ScaledComplex g = inner[lo] * outer[hi];
            g = g * ScaledReal{1.0 / std::sqrt(ri * spec.nodes[k]), 0.0};
            const std::complex<double> val =
                (g * kPrefactor).value() * (row_w[i] * col_w[k]);
            if (!std::isfinite(val.real()) || !std::isfinite(val.imag()))
                throw std::runtime_error(
                    "mode_operator_norm: kernel matrix entry is not finite "
                    "(degenerate spec)");
            m[i * n + k] = val;
        }
    }
    return m;
}

double norm2(const std::vector<std::complex<double>>& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

} // namespace

double mode_operator_norm(ModeIndex mode, double lambda,
                          const AnnulusSpec& spec, BoundaryCondition bc,
                          const OperatorNormOptions& opt) {
    const std::size_t n = spec.nodes.size();
    const std::vector<std::complex<double>> m =
        build_matrix(mode, lambda, spec, bc, opt.weighting);

    std::vector<std::complex<double>> v(n), u(n), t(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.3 * std::sin(2.7 * i);
    const double v0 = norm2(v);
    for (auto& x : v) x /= v0;

    double sigma = 0.0;
    for (int it = 0; it < opt.max_iterations; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> acc = 0.0;
            const std::complex<double>* row = &m[i * n];
            for (std::size_t k = 0; k < n; ++k) acc += row[k] * v[k];
            u[i] = acc;
        }
        const double s = norm2(u);
        if (s == 0.0) return 0.0;
        std::fill(t.begin(), t.end(), std::complex<double>{0.0, 0.0});
        for (std::size_t i = 0; i < n; ++i) {
            const std::complex<double>* row = &m[i * n];
            const std::complex<double> ui = u[i];
            for (std::size_t k = 0; k < n; ++k) t[k] += std::conj(row[k]) * ui;
        }
        const double tn = norm2(t);
        if (tn == 0.0) return s;
        for (std::size_t k = 0; k < n; ++k) v[k] = t[k] / tn;
        if (std::abs(s - sigma) <= opt.tolerance * s) return s;
        sigma = s;
    }
    return sigma;
}

double worst_mode_norm(const std::vector<int>& ls, double lambda,
                       const AnnulusSpec& spec, BoundaryCondition bc,
                       const OperatorNormOptions& opt) {
    double worst = 0.0;
    for (int l : ls)
        worst = std::max(worst,
                         mode_operator_norm(ModeIndex{l}, lambda, spec, bc, opt));
    return worst;
}

} // namespace collar::scaling
