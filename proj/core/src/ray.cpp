#include "collar/scaling/ray.hpp"

#include <cmath>
#include <stdexcept>

namespace collar::scaling {

double ray_sojourn(double alpha, double lambda, double impact) {
    if (!(lambda > 0.0))
        throw std::domain_error("ray_sojourn: lambda must be positive");
    if (!(impact >= 0.0))
        throw std::domain_error("ray_sojourn: impact distance must be >= 0");
    const double h = std::pow(lambda, -alpha);
    if (impact == 0.0) return h; // exact, no cancellation
    const double outer = 1.0 + h;
    if (impact > outer) return 0.0;
    const double far = std::sqrt((outer - impact) * (outer + impact));
    if (impact >= 1.0) return far; // enters through the outer circle only
    return far - std::sqrt((1.0 - impact) * (1.0 + impact));
}

} // namespace collar::scaling
