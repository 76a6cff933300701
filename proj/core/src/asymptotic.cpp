#include "collar/special/asymptotic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace collar::special {
namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kCbrt2 = 1.2599210498948731647672106072782284; // 2^{1/3}
} // namespace

TransitionalResult transitional_bessel(double nu, double tau,
                                       const TransitionalOptions& opt) {
    if (!(nu > 0.0))
        throw std::domain_error("transitional_bessel: order must be positive");
    if (!(std::abs(tau) <= opt.tau_max))
        throw std::domain_error("transitional_bessel: tau outside the turning-point strip");
    const AiryPair ab = airy(-kCbrt2 * tau, opt.airy);
    const double amp = kCbrt2 / std::cbrt(nu);
    TransitionalResult out;
    out.J = amp * ab.Ai;
    out.Y = -amp * ab.Bi;
    out.est_rel_error = opt.est_constant / (std::cbrt(nu) * std::cbrt(nu));
    return out;
}

DebyeResult debye_hankel(double nu, double z, const DebyeOptions& opt) {
    if (!(z > 0.0))
        throw std::domain_error("debye_hankel: argument must be positive");
    const double ratio = nu / z;
    if (!(nu >= opt.nu_min) || !(ratio >= opt.ratio_min) ||
        !(ratio <= opt.ratio_max))
        throw std::domain_error("debye_hankel: outside the oscillatory Debye window");
    const double beta = std::acos(ratio);
    const double tan_beta = std::tan(beta);
    DebyeResult out;
    out.phase = nu * (tan_beta - beta) - 0.25 * kPi;
    const double amp = std::sqrt(2.0 / (kPi * nu * tan_beta));
    out.H = amp * std::complex<double>(std::cos(out.phase), std::sin(out.phase));
    const double cot = 1.0 / tan_beta;
    out.est_rel_error = opt.est_constant * (1.0 + cot * cot * cot) / nu;
    return out;
}

LargeArgumentResult large_argument_hankel(double nu, double z,
                                          const LargeArgumentOptions& opt) {
    if (!(z >= opt.slope * nu + opt.offset))
        throw std::domain_error("large_argument_hankel: argument below the fixed-order window");
    const double mu4 = 4.0 * nu * nu;
    // a_k = prod_{j<=k} (4 nu^2 - (2j-1)^2) / (k! 8^k); P takes the even
    // a_k with alternating sign, Q the odd ones.
    double term = 1.0, P = 1.0, Q = 0.0, prev = 1.0, omitted = 0.0;
    for (int k = 1; k <= opt.max_terms; ++k) {
        const double f = 2.0 * k - 1.0;
        term *= (mu4 - f * f) / (8.0 * k * z);
        if (std::abs(term) >= std::abs(prev)) {
            omitted = std::abs(term);
            break;
        }
        const double signed_term = ((k / 2) % 2 == 0) ? term : -term;
        if (k % 2 == 0)
            P += signed_term;
        else
            Q += signed_term;
        prev = term;
        omitted = std::abs(term);
        if (omitted < 1e-18) break;
    }
    const double omega = z - 0.5 * nu * kPi - 0.25 * kPi;
    LargeArgumentResult out;
    out.H = std::sqrt(2.0 / (kPi * z)) *
            std::complex<double>(std::cos(omega), std::sin(omega)) *
            std::complex<double>(P, Q);
    // the phase subtraction z - (nu/2 + 1/4)pi rounds at half an ulp of z,
    // which the unit-modulus exp(i omega) turns into relative error directly
    out.est_rel_error = std::max(1e-16, omitted) + 4.5e-16 * z;
    return out;
}

} // namespace collar::special
