#include "hh/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "hh/errors.hpp"

namespace hh::oracle {

namespace {

// Kronrod abscissae on [-1, 1] (positive half, descending); odd indices are the
// 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double kronrod;
  double error;
  double abs_mass;
};

double checked(const Evaluator& fn, double x) {
  const double y = fn(x);
  if (!std::isfinite(y)) {
    throw EvaluationError("integrand is not finite at x = " + std::to_string(x));
  }
  return y;
}

Panel gauss_kronrod15(const Evaluator& fn, double a, double b, long& evals) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked(fn, center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_mass = std::abs(kronrod);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = checked(fn, center - dx);
    const double f2 = checked(fn, center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    abs_mass += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  evals += 15;
  return {kronrod * half, std::abs((kronrod - gauss) * half), abs_mass * std::abs(half)};
}

void refine(const Evaluator& fn, double a, double b, double budget, int depth,
            QuadratureResult& acc) {
  const Panel panel = gauss_kronrod15(fn, a, b, acc.evaluations);
  // Below this level the K15/G7 difference is rounding noise, not truncation.
  const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * panel.abs_mass;
  if (panel.error <= budget || panel.error <= roundoff) {
    acc.value += panel.kronrod;
    acc.est_error += panel.error;
    return;
  }
  if (depth >= kMaxDepth) {
    throw ConvergenceError("adaptive quadrature exceeded maximum bisection depth");
  }
  const double mid = 0.5 * (a + b);
  refine(fn, a, mid, 0.5 * budget, depth + 1, acc);
  refine(fn, mid, b, 0.5 * budget, depth + 1, acc);
}

// Uniform grid of `points` samples of g on iv, endpoints included.
std::vector<double> sample(const Evaluator& g, const Interval& iv, int points) {
  std::vector<double> out(static_cast<std::size_t>(points));
  const double h = iv.width() / (points - 1);
  for (int i = 0; i < points; ++i) {
    const double x = (i == points - 1) ? iv.b() : iv.a() + i * h;
    out[static_cast<std::size_t>(i)] = g(x);
  }
  return out;
}

// Midpoints of pairs on a grid of n points are the even and odd nodes of the
// (2n - 1)-point grid, so pair (i, j) has its midpoint at fine index i + j.
template <typename Accept>
bool all_grid_pairs(const Evaluator& g, const Interval& iv, int grid, Accept accept) {
  if (grid < 3) throw DomainError("sampling grid must have at least 3 points");
  const std::vector<double> fine = sample(g, iv, 2 * grid - 1);
  for (int i = 0; i < grid; ++i) {
    for (int j = i + 1; j < grid; ++j) {
      const double gx = fine[static_cast<std::size_t>(2 * i)];
      const double gy = fine[static_cast<std::size_t>(2 * j)];
      const double gm = fine[static_cast<std::size_t>(i + j)];
      if (!accept(gx, gy, gm)) return false;
    }
  }
  return true;
}

Evaluator abs_pow(const Evaluator& g, double q) {
  return [g, q](double x) { return std::pow(std::abs(g(x)), q); };
}

}  // namespace

QuadratureResult integrate(const Evaluator& fn, const Interval& iv, double tol) {
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  QuadratureResult acc;
  refine(fn, iv.a(), iv.b(), tol, 0, acc);
  if (acc.est_error > tol) {
    throw ConvergenceError("quadrature tolerance is below the rounding floor of the integrand");
  }
  return acc;
}

double signed_midpoint_gap(const TestFunction& fn, const Interval& iv, double tol) {
  const double mean = integrate(fn.f, iv, tol * iv.width()).value / iv.width();
  return mean - fn.f(iv.midpoint());
}

double midpoint_gap(const TestFunction& fn, const Interval& iv, double tol) {
  return std::abs(signed_midpoint_gap(fn, iv, tol));
}

bool is_midpoint_convex(const Evaluator& g, const Interval& iv, int grid) {
  return all_grid_pairs(g, iv, grid, [](double gx, double gy, double gm) {
    return gm <= 0.5 * (gx + gy) + kClassTolerance;
  });
}

bool is_midpoint_quasiconvex(const Evaluator& g, const Interval& iv, int grid) {
  return all_grid_pairs(g, iv, grid, [](double gx, double gy, double gm) {
    return gm <= std::max(gx, gy) + kClassTolerance;
  });
}

bool check_convex_abs_d2(const TestFunction& fn, const Interval& iv, int grid) {
  return is_midpoint_convex(abs_pow(fn.d2, 1.0), iv, grid);
}

bool check_quasiconvex_abs_d2(const TestFunction& fn, const Interval& iv, int grid) {
  return is_midpoint_quasiconvex(abs_pow(fn.d2, 1.0), iv, grid);
}

bool check_convex_abs_d2_pow(const TestFunction& fn, const Interval& iv, double q, int grid) {
  return is_midpoint_convex(abs_pow(fn.d2, q), iv, grid);
}

bool check_convex_abs_d1_pow(const TestFunction& fn, const Interval& iv, double q, int grid) {
  return is_midpoint_convex(abs_pow(fn.d1, q), iv, grid);
}

bool check_monotone_abs_d2(const TestFunction& fn, const Interval& iv, Direction dir, int grid) {
  if (grid < 3) throw DomainError("sampling grid must have at least 3 points");
  const std::vector<double> v = sample(abs_pow(fn.d2, 1.0), iv, grid);
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double step = v[i] - v[i - 1];
    if (dir == Direction::Increasing && step < -kClassTolerance) return false;
    if (dir == Direction::Decreasing && step > kClassTolerance) return false;
  }
  return true;
}

SupResult sup_abs_d2(const TestFunction& fn, const Interval& iv) {
  const auto g = [&](double x) { return std::abs(fn.d2(x)); };
  SupResult out;
  const double ga = g(iv.a());
  const double gb = g(iv.b());
  out.endpoint_max = std::max(ga, gb);
  out.argmax = ga >= gb ? iv.a() : iv.b();

  const double h = iv.width() / (kSupGrid - 1);
  int best = 0;
  double best_val = ga;
  for (int i = 1; i < kSupGrid; ++i) {
    const double x = (i == kSupGrid - 1) ? iv.b() : iv.a() + i * h;
    const double v = g(x);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }

  double grid_arg = iv.a() + best * h;
  if (best > 0 && best < kSupGrid - 1) {
    // Golden-section search for the maximum on the bracketing cell pair.
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = grid_arg - h;
    double hi = grid_arg + h;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double g1 = g(x1);
    double g2 = g(x2);
    for (int it = 0; it < 60; ++it) {
      if (g1 > g2) {
        hi = x2;
        x2 = x1;
        g2 = g1;
        x1 = hi - invphi * (hi - lo);
        g1 = g(x1);
      } else {
        lo = x1;
        x1 = x2;
        g1 = g2;
        x2 = lo + invphi * (hi - lo);
        g2 = g(x2);
      }
    }
    const double xr = 0.5 * (lo + hi);
    const double gr = g(xr);
    if (gr > best_val) {
      best_val = gr;
      grid_arg = xr;
    }
  }

  const double scale = std::max(1.0, out.endpoint_max);
  if (best_val > out.endpoint_max + 1e-12 * scale) {
    out.interior_exceeds = true;
    out.value = best_val;
    out.argmax = grid_arg;
  } else {
    out.value = out.endpoint_max;
  }
  return out;
}

}  // namespace hh::oracle
