#include "hh/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hh/errors.hpp"
#include "hh/oracle.hpp"
#include "hh/theorems.hpp"

namespace hh::certifier {

namespace {

void require_hypothesis(const TestFunction& fn, const Interval& iv, CertTheorem theorem) {
  if (!fn.domain.contains(iv)) {
    throw DomainError("interval lies outside the domain of " + fn.id);
  }
  const bool ok = theorem == CertTheorem::ConvexQ1
                      ? oracle::check_convex_abs_d2(fn, iv, kClassGrid)
                      : oracle::check_quasiconvex_abs_d2(fn, iv, kClassGrid);
  if (!ok) {
    throw HypothesisError("class check failed: |f''| of " + fn.id + " is not " +
                          (theorem == CertTheorem::ConvexQ1 ? "convex" : "quasi-convex") +
                          " on the interval");
  }
}

}  // namespace

std::string_view to_string(CertTheorem t) {
  return t == CertTheorem::ConvexQ1 ? "convex_q1" : "quasi_q1";
}

CertifiedIntegral integrate_certified(const TestFunction& fn, const Interval& iv, long n,
                                      CertTheorem theorem, bool check_hypothesis) {
  if (n < 1) throw DomainError("certified integration needs at least one subinterval");
  if (check_hypothesis) require_hypothesis(fn, iv, theorem);

  const double h = iv.width() / static_cast<double>(n);
  const double h3 = h * h * h / 24.0;
  double sum = 0.0;
  double radius = 0.0;
  double left_d2 = std::abs(fn.d2(iv.a()));
  for (long i = 0; i < n; ++i) {
    const double left = iv.a() + static_cast<double>(i) * h;
    const double right = (i == n - 1) ? iv.b() : iv.a() + static_cast<double>(i + 1) * h;
    sum += fn.f(0.5 * (left + right));
    const double right_d2 = std::abs(fn.d2(right));
    const double weight = theorem == CertTheorem::ConvexQ1 ? 0.5 * (left_d2 + right_d2)
                                                           : std::max(left_d2, right_d2);
    radius += h3 * weight;
    left_d2 = right_d2;
  }
  if (!std::isfinite(sum) || !std::isfinite(radius)) {
    throw EvaluationError("non-finite value in certified integration of " + fn.id);
  }
  return {h * sum, radius, n, theorem};
}

CertifiedIntegral refine_to_tolerance(const TestFunction& fn, const Interval& iv, double tol,
                                      CertTheorem theorem, bool check_hypothesis) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  if (check_hypothesis) require_hypothesis(fn, iv, theorem);
  for (long n = 1; n <= kMaxSubintervals; n *= 2) {
    CertifiedIntegral r = integrate_certified(fn, iv, n, theorem, false);
    if (r.error_radius <= tol) return r;
  }
  throw ConvergenceError("error radius did not reach tolerance within 2^20 subintervals");
}

}  // namespace hh::certifier
