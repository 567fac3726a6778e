#include "hh/kernel.hpp"

#include <cmath>

#include "hh/errors.hpp"

namespace hh::kernel {

double m(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("kernel argument must lie in [0, 1]");
  if (t < 0.5) return t * t;
  const double s = 1.0 - t;
  return s * s;
}

double lp_norm_integral(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("kernel norm requires p >= 1");
  return 1.0 / (std::pow(4.0, p) * (2.0 * p + 1.0));
}

double KernelMoments::lp(double p) { return lp_norm_integral(p); }

double weighted_moment() { return KernelMoments::tmoment; }

}  // namespace hh::kernel
