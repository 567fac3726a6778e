#pragma once

#include <string_view>

#include "hh/core.hpp"

namespace hh::certifier {

enum class CertTheorem { ConvexQ1, QuasiQ1 };

std::string_view to_string(CertTheorem t);

/// Composite midpoint estimate with an error radius that encloses the exact
/// integral whenever the class hypothesis holds (in exact arithmetic).
struct CertifiedIntegral {
  double estimate = 0.0;
  double error_radius = 0.0;
  long subintervals = 1;
  CertTheorem theorem_used = CertTheorem::ConvexQ1;
};

inline constexpr long kMaxSubintervals = 1L << 20;

/// Uniform n-panel midpoint rule. Each panel of width h contributes
/// h^3/24 * mean(|f''| at its ends) (ConvexQ1) or h^3/24 * max(...) (QuasiQ1)
/// to the radius; terms are summed left to right.
///
/// When check_hypothesis is set the class of |f''| is sampled on the whole
/// interval first (both classes are inherited by subintervals) and a
/// HypothesisError is thrown on refutation.
CertifiedIntegral integrate_certified(const TestFunction& fn, const Interval& iv, long n,
                                      CertTheorem theorem, bool check_hypothesis = true);

/// Doubles n from 1 until error_radius <= tol. Throws ConvergenceError past
/// kMaxSubintervals.
CertifiedIntegral refine_to_tolerance(const TestFunction& fn, const Interval& iv, double tol,
                                      CertTheorem theorem, bool check_hypothesis = true);

}  // namespace hh::certifier
