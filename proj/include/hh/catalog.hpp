#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hh/core.hpp"

namespace hh {

/// The built-in test functions, each with closed-form f' and f''.
///
/// Ids: x2, x3, x4, x5, inv_x, neg_log, exp, affine (3x+1), x2_5 (x^{5/2},
/// whose |f''| is quasi-convex but not convex) and sin (neither class on
/// [0, pi]).
const std::vector<TestFunction>& builtin_catalog();

std::optional<TestFunction> find_function(std::string_view id);

/// x^n for integer n. Negative n lives on the positive reals.
TestFunction monomial(int n);

/// sum_k coeffs[k] x^k with declared class Unknown.
TestFunction polynomial(std::string id, std::span<const double> coeffs,
                        Interval sample_region = Interval{-1.0, 1.0});

}  // namespace hh
