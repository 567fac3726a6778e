#pragma once

#include "hh/core.hpp"
#include "hh/oracle.hpp"

namespace hh::bounds {

// Midpoint-gap bounds for twice differentiable f with |f''|^q quasi-convex.
// sup{x^q, y^q}^(1/q) is evaluated as max(x, y), so none of these depend on q
// numerically.

/// (b-a)^2/24 * max(d2a, d2b)
double bound_quasi_q1(const Interval& iv, double d2a, double d2b);

/// Monotone |f''|: (b-a)^2/24 * |f''(b)| when increasing, |f''(a)| when
/// decreasing. Throws HypothesisError when the endpoint values contradict dir.
double bound_quasi_monotone(const Interval& iv, const TestFunction& fn, oracle::Direction dir);

/// (b-a)^2 / (8 (2p+1)^(1/p)) * max(d2a, d2b)
double bound_quasi_holder(const Interval& iv, double d2a, double d2b, const ConjugatePair& pq);

/// (b-a)^2/24 * max(d2a, d2b), q >= 1.
double bound_quasi_powermean(const Interval& iv, double d2a, double d2b, double q);

}  // namespace hh::bounds
