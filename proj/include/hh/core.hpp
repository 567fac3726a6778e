#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace hh {

/// Closed interval [a, b] with a < b strictly.
class Interval {
public:
  Interval(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double width() const noexcept { return b_ - a_; }
  double midpoint() const noexcept { return 0.5 * (a_ + b_); }
  bool contains(double x) const noexcept { return a_ <= x && x <= b_; }

  friend bool operator==(const Interval&, const Interval&) = default;

private:
  double a_;
  double b_;
};

/// Open set (lower, upper) on which a function and its first two derivatives
/// are finite. Infinite bounds mean "all reals" on that side.
struct Domain {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();

  static Domain all_reals() { return {}; }
  static Domain positive_reals() { return {0.0, std::numeric_limits<double>::infinity()}; }

  bool contains(double x) const noexcept { return lower < x && x < upper; }
  bool contains(const Interval& iv) const noexcept { return contains(iv.a()) && contains(iv.b()); }
};

/// Author-asserted class of |f''| on the function's sample region.
enum class FunctionClass { ConvexAbsD2, QuasiConvexAbsD2, Neither, Unknown };

std::string_view to_string(FunctionClass c);

using Evaluator = std::function<double(double)>;

/// f together with closed-form f' and f''. Immutable once built.
struct TestFunction {
  std::string id;
  Evaluator f;
  Evaluator d1;
  Evaluator d2;
  Domain domain;
  FunctionClass declared_class = FunctionClass::Unknown;
  /// Region inside the domain where random subintervals are drawn and where
  /// declared_class is asserted to hold.
  Interval sample_region{0.0, 1.0};
};

/// Hölder conjugate of p: q = p / (p - 1). Throws DomainError for p <= 1.
double conjugate_of(double p);

/// Hölder exponents p, q > 1 with 1/p + 1/q = 1.
class ConjugatePair {
public:
  ConjugatePair(double p, double q);

  static ConjugatePair from_p(double p);
  static ConjugatePair from_q(double q);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

private:
  double p_;
  double q_;
};

/// Every bound the library can evaluate, including the special-means
/// propositions obtained by specialising a bound to x^n, -ln x and 1/x.
enum class TheoremId {
  ConvexQ1,
  ConvexHolder,
  ConvexPowerMean,
  QuasiQ1,
  QuasiMonotone,
  QuasiHolder,
  QuasiPowerMean,
  BaselineQ1,
  BaselinePowerMean,
  MonomialConvexQ1,
  IdentricHolder,
  MonomialPowerMean,
  ReciprocalPowerMean,
  ReciprocalQuasi,
  MonomialQuasiHolder,
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view name);

/// One bound applied to one function on one interval.
struct BoundReport {
  TheoremId theorem_id = TheoremId::ConvexQ1;
  std::string function_id;
  Interval interval{0.0, 1.0};
  /// q for power-mean forms, (p, q) for Hölder forms.
  std::optional<double> q;
  std::optional<ConjugatePair> exponents;
  double bound = 0.0;
  double true_gap = 0.0;
  double slack = 0.0;
  bool valid = false;
  /// Value of the bound with the constant exactly as originally printed,
  /// where that differs from the corrected one.
  std::optional<double> literal_bound;
};

/// Fills slack and valid from bound and true_gap.
void finalize(BoundReport& report, double tolerance = 1e-9);

}  // namespace hh
