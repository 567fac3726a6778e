#include "hh/bounds_quasiconvex.hpp"

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

}  // namespace

double bound_quasi_q1(const Interval& iv, double d2a, double d2b) {
  require_nonnegative(d2a, d2b);
  const double w = iv.width();
  return w * w / 24.0 * std::max(d2a, d2b);
}

double bound_quasi_monotone(const Interval& iv, const TestFunction& fn, oracle::Direction dir) {
  const double da = std::abs(fn.d2(iv.a()));
  const double db = std::abs(fn.d2(iv.b()));
  const double w = iv.width();
  if (dir == oracle::Direction::Increasing) {
    if (da > db) throw HypothesisError("|f''| is not increasing: |f''(a)| > |f''(b)|");
    return w * w / 24.0 * db;
  }
  if (db > da) throw HypothesisError("|f''| is not decreasing: |f''(b)| > |f''(a)|");
  return w * w / 24.0 * da;
}

double bound_quasi_holder(const Interval& iv, double d2a, double d2b, const ConjugatePair& pq) {
  require_nonnegative(d2a, d2b);
  const double w = iv.width();
  const double p = pq.p();
  return w * w / (8.0 * std::pow(2.0 * p + 1.0, 1.0 / p)) * std::max(d2a, d2b);
}

double bound_quasi_powermean(const Interval& iv, double d2a, double d2b, double q) {
  if (!(q >= 1.0) || !std::isfinite(q)) throw DomainError("power-mean exponent requires q >= 1");
  return bound_quasi_q1(iv, d2a, d2b);
}

}  // namespace hh::bounds
