#pragma once

#include "hh/core.hpp"

namespace hh::identity {

/// Leading factor in front of the kernel integral. Corrected is (b-a)^2/4;
/// AsPrinted reproduces the (b-a)^2/2 misprint for regression tests.
enum class Coefficient { Corrected, AsPrinted };

/// c * integral_0^1 m(t) [f''(ta + (1-t)b) + f''(tb + (1-t)a)] dt,
/// evaluated by adaptive quadrature to absolute accuracy tol.
double identity_rhs(const TestFunction& fn, const Interval& iv, double tol,
                    Coefficient coefficient = Coefficient::Corrected);

/// |signed midpoint gap - identity_rhs|. Quadrature noise only, when the
/// corrected coefficient is used.
double identity_residual(const TestFunction& fn, const Interval& iv, double tol,
                         Coefficient coefficient = Coefficient::Corrected);

}  // namespace hh::identity
