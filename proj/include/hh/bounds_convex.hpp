#pragma once

#include "hh/core.hpp"

namespace hh::bounds {

/// ((x^q + y^q) / 2)^(1/q) for x, y >= 0 and q >= 1, scaled to avoid overflow.
double power_mean(double x, double y, double q);

// Midpoint-gap bounds for twice differentiable f with |f''|^q convex. The
// inputs d2a, d2b are |f''(a)| and |f''(b)|.

/// (b-a)^2/24 * (d2a + d2b)/2. Attained by every f with linear f''.
double bound_convex_q1(const Interval& iv, double d2a, double d2b);

/// (b-a)^2 / (8 (2p+1)^(1/p)) * ((d2a^q + d2b^q)/2)^(1/q). Requires q > 1.
double bound_convex_holder(const Interval& iv, double d2a, double d2b, const ConjugatePair& pq);

/// (b-a)^2/24 * ((d2a^q + d2b^q)/2)^(1/q), q >= 1. Equals bound_convex_q1 at q = 1.
double bound_convex_powermean(const Interval& iv, double d2a, double d2b, double q);

/// First-derivative baseline for convex |f'|^q: (b-a)/4 * ((d1a^q + d1b^q)/2)^(1/q).
/// q = 1 gives the plain |f'| convex version.
double baseline_first_derivative(const Interval& iv, double d1a, double d1b, double q);

struct ConstantComparison {
  double power_mean_constant;  // 1/24
  double holder_constant;      // 1/(8 (2p+1)^(1/p))
  bool power_mean_smaller;
};

/// Compares the two leading constants; power_mean_smaller holds for every p > 1
/// because 3^p > 2p + 1 there.
ConstantComparison constant_comparison(double p);

}  // namespace hh::bounds
