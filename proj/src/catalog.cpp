#include "hh/catalog.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace hh {

namespace {

// Horner evaluation of sum_k c[k] x^k.
double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<double> derivative(const std::vector<double>& c) {
  std::vector<double> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
  return d;
}

std::vector<TestFunction> make_catalog() {
  std::vector<TestFunction> out;
  for (int n : {2, 3, 4, 5}) out.push_back(monomial(n));

  out.push_back({"inv_x",
                 [](double x) { return 1.0 / x; },
                 [](double x) { return -1.0 / (x * x); },
                 [](double x) { return 2.0 / (x * x * x); },
                 Domain::positive_reals(), FunctionClass::ConvexAbsD2, Interval{0.25, 4.0}});

  out.push_back({"neg_log",
                 [](double x) { return -std::log(x); },
                 [](double x) { return -1.0 / x; },
                 [](double x) { return 1.0 / (x * x); },
                 Domain::positive_reals(), FunctionClass::ConvexAbsD2, Interval{0.25, 4.0}});

  out.push_back({"exp",
                 [](double x) { return std::exp(x); },
                 [](double x) { return std::exp(x); },
                 [](double x) { return std::exp(x); },
                 Domain::all_reals(), FunctionClass::ConvexAbsD2, Interval{-2.0, 2.0}});

  out.push_back({"affine",
                 [](double x) { return 3.0 * x + 1.0; },
                 [](double) { return 3.0; },
                 [](double) { return 0.0; },
                 Domain::all_reals(), FunctionClass::ConvexAbsD2, Interval{-2.0, 2.0}});

  // |f''| = 3.75 sqrt(x): increasing and concave, so quasi-convex only.
  out.push_back({"x2_5",
                 [](double x) { return x * x * std::sqrt(x); },
                 [](double x) { return 2.5 * x * std::sqrt(x); },
                 [](double x) { return 3.75 * std::sqrt(x); },
                 Domain::positive_reals(), FunctionClass::QuasiConvexAbsD2, Interval{0.1, 4.0}});

  out.push_back({"sin",
                 [](double x) { return std::sin(x); },
                 [](double x) { return std::cos(x); },
                 [](double x) { return -std::sin(x); },
                 Domain::all_reals(), FunctionClass::Neither, Interval{0.0, std::numbers::pi}});
  return out;
}

}  // namespace

const std::vector<TestFunction>& builtin_catalog() {
  static const std::vector<TestFunction> catalog = make_catalog();
  return catalog;
}

std::optional<TestFunction> find_function(std::string_view id) {
  for (const auto& fn : builtin_catalog()) {
    if (fn.id == id) return fn;
  }
  return std::nullopt;
}

TestFunction monomial(int n) {
  const double e = n;
  const bool positive_only = n < 0;
  TestFunction fn;
  fn.id = "x" + std::to_string(n);
  fn.f = [e](double x) { return std::pow(x, e); };
  fn.d1 = [e](double x) { return e * std::pow(x, e - 1.0); };
  fn.d2 = [e](double x) { return e * (e - 1.0) * std::pow(x, e - 2.0); };
  fn.domain = positive_only ? Domain::positive_reals() : Domain::all_reals();
  // |n(n-1) x^{n-2}| is convex on R for n >= 3 or n <= 2 with x > 0; n = 0, 1, 2
  // give a constant.
  fn.declared_class = FunctionClass::ConvexAbsD2;
  fn.sample_region = positive_only ? Interval{0.25, 4.0} : Interval{-2.0, 2.0};
  return fn;
}

TestFunction polynomial(std::string id, std::span<const double> coeffs, Interval sample_region) {
  std::vector<double> c(coeffs.begin(), coeffs.end());
  std::vector<double> c1 = derivative(c);
  std::vector<double> c2 = derivative(c1);
  TestFunction fn;
  fn.id = std::move(id);
  fn.f = [c](double x) { return horner(c, x); };
  fn.d1 = [c1](double x) { return horner(c1, x); };
  fn.d2 = [c2](double x) { return horner(c2, x); };
  fn.domain = Domain::all_reals();
  fn.declared_class = FunctionClass::Unknown;
  fn.sample_region = sample_region;
  return fn;
}

}  // namespace hh
