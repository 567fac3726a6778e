#pragma once

#include <optional>

#include "hh/core.hpp"

namespace hh {

inline constexpr int kClassGrid = 64;

/// Whether the oracle samplers fail to refute the class hypothesis of
/// `theorem` for fn on iv. q is the exponent of the |f''|^q (or |f'|^q) forms.
bool hypothesis_holds(TheoremId theorem, const TestFunction& fn, const Interval& iv,
                      double q = 1.0, int grid = kClassGrid);

/// Evaluates one of the nine function-level bounds at the endpoint derivative
/// values of fn and compares it with the oracle midpoint gap.
///
/// q selects the exponent for the Hölder and power-mean forms (Hölder forms
/// derive p from q and need q > 1). Defaults to 2 for those and is ignored by
/// the q = 1 forms. The hypothesis is not checked here; see hypothesis_holds.
BoundReport apply_theorem(TheoremId theorem, const TestFunction& fn, const Interval& iv,
                          std::optional<double> q = std::nullopt, double tol = 1e-12);

/// True for the nine theorems accepted by apply_theorem.
bool is_function_theorem(TheoremId theorem);

}  // namespace hh
