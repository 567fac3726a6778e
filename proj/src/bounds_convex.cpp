#include "hh/bounds_convex.hpp"

#include <algorithm>
#include <cmath>

#include "hh/errors.hpp"

namespace hh::bounds {

namespace {

void require_nonnegative(double x, double y) {
  if (!(x >= 0.0) || !(y >= 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError("derivative magnitudes must be finite and nonnegative");
  }
}

void require_q(double q) {
  if (!(q >= 1.0) || !std::isfinite(q)) throw DomainError("power-mean exponent requires q >= 1");
}

double holder_constant(double p) { return 1.0 / (8.0 * std::pow(2.0 * p + 1.0, 1.0 / p)); }

}  // namespace

double power_mean(double x, double y, double q) {
  require_nonnegative(x, y);
  require_q(q);
  if (q == 1.0) return 0.5 * (x + y);
  const double top = std::max(x, y);
  if (top == 0.0) return 0.0;
  const double s = std::pow(x / top, q) + std::pow(y / top, q);
  return top * std::pow(0.5 * s, 1.0 / q);
}

double bound_convex_q1(const Interval& iv, double d2a, double d2b) {
  require_nonnegative(d2a, d2b);
  const double w = iv.width();
  return w * w / 24.0 * (0.5 * (d2a + d2b));
}

double bound_convex_holder(const Interval& iv, double d2a, double d2b, const ConjugatePair& pq) {
  require_nonnegative(d2a, d2b);
  const double w = iv.width();
  return w * w * holder_constant(pq.p()) * power_mean(d2a, d2b, pq.q());
}

double bound_convex_powermean(const Interval& iv, double d2a, double d2b, double q) {
  require_nonnegative(d2a, d2b);
  require_q(q);
  const double w = iv.width();
  return w * w / 24.0 * power_mean(d2a, d2b, q);
}

double baseline_first_derivative(const Interval& iv, double d1a, double d1b, double q) {
  require_nonnegative(d1a, d1b);
  require_q(q);
  return iv.width() / 4.0 * power_mean(d1a, d1b, q);
}

ConstantComparison constant_comparison(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("constant comparison requires p > 1");
  const double pm = 1.0 / 24.0;
  const double h = holder_constant(p);
  return {pm, h, pm < h};
}

}  // namespace hh::bounds
