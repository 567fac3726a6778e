#pragma once

#include "hh/core.hpp"

namespace hh::oracle {

struct QuadratureResult {
  double value = 0.0;
  double est_error = 0.0;
  long evaluations = 0;
};

inline constexpr int kMaxDepth = 60;

/// Adaptive 7/15-point Gauss-Kronrod quadrature with recursive bisection.
///
/// Each panel is accepted when |K15 - G7| fits its share of the absolute
/// budget; a bisected panel hands half its budget to each child. Throws
/// EvaluationError on a non-finite sample and ConvergenceError past
/// kMaxDepth or when the summed estimate ends above tol.
QuadratureResult integrate(const Evaluator& fn, const Interval& iv, double tol);

/// (1/(b-a)) * integral_a^b f - f((a+b)/2), with sign.
double signed_midpoint_gap(const TestFunction& fn, const Interval& iv, double tol = 1e-12);

/// |(1/(b-a)) * integral_a^b f - f((a+b)/2)|; the mean value is accurate to tol.
double midpoint_gap(const TestFunction& fn, const Interval& iv, double tol = 1e-12);

inline constexpr double kClassTolerance = 1e-9;

// Grid samplers. They can refute a class membership but never prove it.

/// g((x+y)/2) <= (g(x)+g(y))/2 + 1e-9 for all pairs of a uniform grid.
bool is_midpoint_convex(const Evaluator& g, const Interval& iv, int grid);
/// g((x+y)/2) <= max(g(x), g(y)) + 1e-9 for all pairs of a uniform grid.
bool is_midpoint_quasiconvex(const Evaluator& g, const Interval& iv, int grid);

bool check_convex_abs_d2(const TestFunction& fn, const Interval& iv, int grid);
bool check_quasiconvex_abs_d2(const TestFunction& fn, const Interval& iv, int grid);
/// Same test applied to |f''|^q.
bool check_convex_abs_d2_pow(const TestFunction& fn, const Interval& iv, double q, int grid);
/// Same test applied to |f'|^q (hypothesis of the first-derivative baselines).
bool check_convex_abs_d1_pow(const TestFunction& fn, const Interval& iv, double q, int grid);

enum class Direction { Increasing, Decreasing };

/// True when |f''| is monotone in the given direction on a uniform grid, within 1e-9.
bool check_monotone_abs_d2(const TestFunction& fn, const Interval& iv, Direction dir, int grid);

struct SupResult {
  double value = 0.0;        // max of the endpoint value and the dense-grid value
  double endpoint_max = 0.0; // max(|f''(a)|, |f''(b)|)
  double argmax = 0.0;
  bool interior_exceeds = false;  // interior beat both endpoints: quasi-convexity refuted
};

inline constexpr int kSupGrid = 1025;

/// sup |f''| on iv: endpoint maximum cross-checked by a 1025-point grid plus
/// one golden-section refinement around the grid argmax.
SupResult sup_abs_d2(const TestFunction& fn, const Interval& iv);

}  // namespace hh::oracle
