#include "collar/helmholtz/boundary.hpp"

#include <cmath>
#include <stdexcept>

namespace collar::helmholtz {

double legendre_p(int l, double x) {
    if (l < 0) throw std::domain_error("legendre_p: degree must be >= 0");
    double p0 = 1.0, p1 = x;
    if (l == 0) return p0;
    for (int k = 2; k <= l; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

std::vector<double> boundary_sample_angles(int n) {
    const GaussRule rule = gauss_legendre(n);
    std::vector<double> theta(rule.nodes.size());
    for (std::size_t i = 0; i < theta.size(); ++i)
        theta[i] = std::acos(rule.nodes[i]);
    return theta;
}

BoundaryData expand_boundary(const std::vector<std::complex<double>>& samples,
                             int l_max) {
    if (l_max < 0) throw std::domain_error("expand_boundary: l_max must be >= 0");
    const int n = static_cast<int>(samples.size());
    if (n < l_max + 1)
        throw std::invalid_argument("expand_boundary: need at least l_max + 1 samples");
    const GaussRule rule = gauss_legendre(n);
    BoundaryData data;
    data.legendre_coeffs.resize(l_max + 1);
    for (int l = 0; l <= l_max; ++l) {
        std::complex<double> acc{0.0, 0.0};
        for (int i = 0; i < n; ++i)
            acc += rule.weights[i] * samples[i] * legendre_p(l, rule.nodes[i]);
        data.legendre_coeffs[l] = 0.5 * (2.0 * l + 1.0) * acc;
    }
    return data;
}

SynthesisResult synthesize(const BoundaryData& boundary, double lambda,
                           double r, double theta) {
    if (!(r >= 1.0))
        throw std::domain_error("synthesize: radius must be >= 1");
    const int cap = static_cast<int>(std::ceil(4.0 * lambda));
    const double x = std::cos(theta);
    SynthesisResult out;
    out.value = {0.0, 0.0};
    const int top = std::min(boundary.l_max(), cap);
    for (int l = 0; l <= top; ++l) {
        const std::complex<double> c = boundary.legendre_coeffs[l];
        if (c == std::complex<double>(0.0, 0.0)) continue;
        out.value += homogeneous_mode({l}, lambda, c, r) * legendre_p(l, x);
    }
    out.l_used = top;
    // modes above the cap are deep elliptic: |H(lambda r)/H(lambda)| <= 1
    // for r >= 1, so dropped mass is bounded by the coefficient tail
    for (int l = top + 1; l <= boundary.l_max(); ++l)
        out.tail_bound += std::abs(boundary.legendre_coeffs[l]);
    return out;
}

} // namespace collar::helmholtz
