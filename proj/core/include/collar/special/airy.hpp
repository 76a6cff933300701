#ifndef COLLAR_SPECIAL_AIRY_HPP
#define COLLAR_SPECIAL_AIRY_HPP

#include "collar/scaled.hpp"

namespace collar::special {

struct AiryPair {
    double Ai = 0.0;
    double Bi = 0.0;
};

struct ScaledAiryPair {
    ScaledReal Ai, Bi;
};

struct AiryOptions {
    double x_switch = 6.0; // Maclaurin series inside [-x_switch, x_switch],
                           // asymptotic expansions beyond
};

// Total on finite reals.  Series side is accumulated in extended precision
// (the two Maclaurin solutions cancel to ~exp(2*xi) at the switch point);
// asymptotic side truncates at the smallest term, so the claimed accuracy
// floor is ~3e-9 at |x| = 6 and improves rapidly away from it.
AiryPair airy(double x, const AiryOptions& opt = {});

// Same values with the exp(+-xi) growth factored out, so the caller can
// combine them with other scaled quantities without overflow.
ScaledAiryPair airy_scaled(double x, const AiryOptions& opt = {});

// Truncation-floor estimate for the evaluation at x.
double airy_est_rel_error(double x, const AiryOptions& opt = {});

} // namespace collar::special

#endif
