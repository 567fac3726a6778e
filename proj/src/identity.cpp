#include "hh/identity.hpp"

#include <cmath>

#include "hh/kernel.hpp"
#include "hh/oracle.hpp"

namespace hh::identity {

double identity_rhs(const TestFunction& fn, const Interval& iv, double tol,
                    Coefficient coefficient) {
  const double a = iv.a();
  const double b = iv.b();
  const double w = iv.width();
  const double factor = (coefficient == Coefficient::Corrected ? 0.25 : 0.5) * w * w;
  const Evaluator integrand = [&](double t) {
    return kernel::m(t) * (fn.d2(t * a + (1.0 - t) * b) + fn.d2(t * b + (1.0 - t) * a));
  };
  const double integral = oracle::integrate(integrand, Interval{0.0, 1.0}, tol / factor).value;
  return factor * integral;
}

double identity_residual(const TestFunction& fn, const Interval& iv, double tol,
                         Coefficient coefficient) {
  const double lhs = oracle::signed_midpoint_gap(fn, iv, tol);
  return std::abs(lhs - identity_rhs(fn, iv, tol, coefficient));
}

}  // namespace hh::identity
