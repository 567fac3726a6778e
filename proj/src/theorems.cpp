#include "hh/theorems.hpp"

#include <cmath>

#include "hh/bounds_convex.hpp"
#include "hh/bounds_quasiconvex.hpp"
#include "hh/errors.hpp"
#include "hh/oracle.hpp"

namespace hh {

namespace {

std::optional<oracle::Direction> monotone_direction(const TestFunction& fn, const Interval& iv,
                                                    int grid) {
  using oracle::Direction;
  if (oracle::check_monotone_abs_d2(fn, iv, Direction::Increasing, grid)) {
    return Direction::Increasing;
  }
  if (oracle::check_monotone_abs_d2(fn, iv, Direction::Decreasing, grid)) {
    return Direction::Decreasing;
  }
  return std::nullopt;
}

}  // namespace

bool is_function_theorem(TheoremId theorem) {
  switch (theorem) {
    case TheoremId::ConvexQ1:
    case TheoremId::ConvexHolder:
    case TheoremId::ConvexPowerMean:
    case TheoremId::QuasiQ1:
    case TheoremId::QuasiMonotone:
    case TheoremId::QuasiHolder:
    case TheoremId::QuasiPowerMean:
    case TheoremId::BaselineQ1:
    case TheoremId::BaselinePowerMean:
      return true;
    default:
      return false;
  }
}

bool hypothesis_holds(TheoremId theorem, const TestFunction& fn, const Interval& iv, double q,
                      int grid) {
  if (!fn.domain.contains(iv)) return false;
  switch (theorem) {
    case TheoremId::ConvexQ1:
      return oracle::check_convex_abs_d2(fn, iv, grid);
    case TheoremId::ConvexHolder:
    case TheoremId::ConvexPowerMean:
      return oracle::check_convex_abs_d2_pow(fn, iv, q, grid);
    case TheoremId::QuasiQ1:
    case TheoremId::QuasiHolder:
    case TheoremId::QuasiPowerMean:
      // t -> t^q is increasing, so |f''|^q and |f''| are quasi-convex together.
      return oracle::check_quasiconvex_abs_d2(fn, iv, grid);
    case TheoremId::QuasiMonotone:
      return monotone_direction(fn, iv, grid).has_value();
    case TheoremId::BaselineQ1:
      return oracle::check_convex_abs_d1_pow(fn, iv, 1.0, grid);
    case TheoremId::BaselinePowerMean:
      return oracle::check_convex_abs_d1_pow(fn, iv, q, grid);
    default:
      throw DomainError("not a function-level theorem: " + std::string(to_string(theorem)));
  }
}

BoundReport apply_theorem(TheoremId theorem, const TestFunction& fn, const Interval& iv,
                          std::optional<double> q, double tol) {
  if (!fn.domain.contains(iv)) {
    throw DomainError("interval lies outside the domain of " + fn.id);
  }
  BoundReport r;
  r.theorem_id = theorem;
  r.function_id = fn.id;
  r.interval = iv;

  const double d2a = std::abs(fn.d2(iv.a()));
  const double d2b = std::abs(fn.d2(iv.b()));
  const double qq = q.value_or(2.0);

  switch (theorem) {
    case TheoremId::ConvexQ1:
      r.bound = bounds::bound_convex_q1(iv, d2a, d2b);
      break;
    case TheoremId::ConvexHolder: {
      const auto pq = ConjugatePair::from_q(qq);
      r.exponents = pq;
      r.q = pq.q();
      r.bound = bounds::bound_convex_holder(iv, d2a, d2b, pq);
      break;
    }
    case TheoremId::ConvexPowerMean:
      r.q = qq;
      r.bound = bounds::bound_convex_powermean(iv, d2a, d2b, qq);
      break;
    case TheoremId::QuasiQ1:
      r.bound = bounds::bound_quasi_q1(iv, d2a, d2b);
      break;
    case TheoremId::QuasiMonotone: {
      const auto dir =
          d2a <= d2b ? oracle::Direction::Increasing : oracle::Direction::Decreasing;
      r.bound = bounds::bound_quasi_monotone(iv, fn, dir);
      break;
    }
    case TheoremId::QuasiHolder: {
      const auto pq = ConjugatePair::from_q(qq);
      r.exponents = pq;
      r.q = pq.q();
      r.bound = bounds::bound_quasi_holder(iv, d2a, d2b, pq);
      break;
    }
    case TheoremId::QuasiPowerMean:
      r.q = qq;
      r.bound = bounds::bound_quasi_powermean(iv, d2a, d2b, qq);
      break;
    case TheoremId::BaselineQ1:
      r.bound = bounds::baseline_first_derivative(iv, std::abs(fn.d1(iv.a())),
                                                  std::abs(fn.d1(iv.b())), 1.0);
      break;
    case TheoremId::BaselinePowerMean:
      r.q = qq;
      r.bound = bounds::baseline_first_derivative(iv, std::abs(fn.d1(iv.a())),
                                                  std::abs(fn.d1(iv.b())), qq);
      break;
    default:
      throw DomainError("not a function-level theorem: " + std::string(to_string(theorem)));
  }

  r.true_gap = oracle::midpoint_gap(fn, iv, tol);
  finalize(r);
  return r;
}

}  // namespace hh
