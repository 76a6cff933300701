#include "collar/scaling/measures.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "collar/helmholtz/solver.hpp"
#include "collar/special/evaluator.hpp"
#include "collar/special/half_integer.hpp"

namespace collar::scaling {
namespace {

using special::HalfIntegerEval;
using collar::ScaledReal;

ScaledReal annulus_sum(int l, double lambda, const helmholtz::AnnulusSpec& spec) {
    ScaledReal acc = ScaledReal::from(0.0);
    for (std::size_t k = 0; k < spec.nodes.size(); ++k) {
        const HalfIntegerEval e = special::half_integer_bessel(l, lambda * spec.nodes[k]);
        const ScaledReal mod_sq = e.J * e.J + e.Y * e.Y;
        acc = acc + mod_sq * spec.weights[k];
    }
    return acc;
}

} // namespace

double annulus_l2_sq(int l, double lambda, const helmholtz::AnnulusSpec& spec) {
    return annulus_sum(l, lambda, spec).value();
}

double annulus_l2_sq_log(int l, double lambda,
                         const helmholtz::AnnulusSpec& spec) {
    return annulus_sum(l, lambda, spec).log_abs();
}

double boundary_modulus_sq(int l, double lambda) {
    return special::hankel_modulus_sq(special::Order{l + 0.5}, lambda);
}

double boundary_modulus_sq_log(int l, double lambda) {
    return special::hankel_modulus_sq_log(special::Order{l + 0.5}, lambda);
}

double cross_term_l2(int l, double lambda, const helmholtz::AnnulusSpec& spec) {
    const HalfIntegerEval at_boundary = special::half_integer_bessel(l, lambda);
    ScaledReal acc = ScaledReal::from(0.0);
    for (std::size_t k = 0; k < spec.nodes.size(); ++k) {
        const HalfIntegerEval e = special::half_integer_bessel(l, lambda * spec.nodes[k]);
        const ScaledReal c = e.J * at_boundary.Y - at_boundary.J * e.Y;
        acc = acc + c * c * spec.weights[k];
    }
    return std::exp(0.5 * acc.log_abs());
}

double solution_l2(int l, double lambda, const helmholtz::AnnulusSpec& spec) {
    helmholtz::RadialGridFunction f;
    f.r = spec.nodes;
    f.values.assign(spec.nodes.size(), std::complex<double>{1.0, 0.0});
    const helmholtz::RadialGridFunction w = helmholtz::solve_mode_dirichlet(
        helmholtz::ModeIndex{l}, lambda, f, spec);
    double acc = 0.0;
    for (std::size_t k = 0; k < w.values.size(); ++k)
        acc += spec.weights[k] * std::norm(w.values[k]);
    return std::sqrt(acc);
}

} // namespace collar::scaling
