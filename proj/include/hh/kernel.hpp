#pragma once

namespace hh::kernel {

/// Peak kernel on [0, 1]: t^2 below 1/2, (1 - t)^2 from 1/2 on.
/// Throws DomainError outside [0, 1].
double m(double t);

/// Closed-form moments of m.
struct KernelMoments {
  /// integral_0^1 m(t) dt
  static constexpr double l1 = 1.0 / 12.0;
  /// integral_0^1 m(t) t dt, equal to integral_0^1 m(t) (1 - t) dt by symmetry
  static constexpr double tmoment = 1.0 / 24.0;
  /// integral_0^1 m(t)^p dt
  static double lp(double p);
};

/// integral_0^1 m(t)^p dt = 1 / (4^p (2p + 1)), p >= 1.
double lp_norm_integral(double p);

/// integral_0^1 m(t) t dt = 1/24.
double weighted_moment();

}  // namespace hh::kernel
