#include "hh/means.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <utility>

#include "hh/bounds_convex.hpp"
#include "hh/catalog.hpp"
#include "hh/errors.hpp"

namespace hh::means {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_positive(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("means require finite a, b > 0");
  }
}

// Orders (a, b) and reports whether they are numerically equal.
bool ordered_equal(double& a, double& b) {
  if (a > b) std::swap(a, b);
  return (b - a) < 1e-12 * b;
}

// ln(b/a) for 0 < a < b without cancellation when b is close to a.
double log_ratio(double a, double b) { return std::log1p((b - a) / a); }

// Rounding allowance for |x - y| when x and y are each accurate to a few ulps.
double cancellation_tol(double x, double y) {
  return 256.0 * kEps * std::max(std::abs(x), std::abs(y)) + 1e-300;
}

int require_monomial_order(int n) {
  const long k = std::labs(static_cast<long>(n) * (n - 1));
  if (k < 3) throw HypothesisError("monomial propositions require |n(n-1)| >= 3");
  return static_cast<int>(k);
}

BoundReport make_report(TheoremId id, std::string function_id, double a, double b, double lhs,
                        double bound, double tol) {
  BoundReport r;
  r.theorem_id = id;
  r.function_id = std::move(function_id);
  r.interval = Interval{a, b};
  r.true_gap = lhs;
  r.bound = bound;
  finalize(r, tol);
  return r;
}

}  // namespace

std::string_view to_string(MeanKind kind) {
  switch (kind) {
    case MeanKind::A: return "A";
    case MeanKind::G: return "G";
    case MeanKind::H: return "H";
    case MeanKind::L: return "L";
    case MeanKind::I: return "I";
    case MeanKind::Lp: return "Lp";
  }
  return "?";
}

double arithmetic(double a, double b) {
  require_positive(a, b);
  return 0.5 * (a + b);
}

double geometric(double a, double b) {
  require_positive(a, b);
  return std::sqrt(a * b);
}

double harmonic(double a, double b) {
  require_positive(a, b);
  return 2.0 * a * b / (a + b);
}

double logarithmic(double a, double b) {
  require_positive(a, b);
  if (ordered_equal(a, b)) return a;
  return (b - a) / log_ratio(a, b);
}

double identric(double a, double b) {
  require_positive(a, b);
  if (ordered_equal(a, b)) return a;
  // (b ln b - a ln a)/(b - a) = ln a + b ln(b/a)/(b - a)
  const double d = b - a;
  return std::exp(std::log(a) + b * log_ratio(a, b) / d - 1.0);
}

double p_logarithmic(double a, double b, double p) {
  require_positive(a, b);
  if (!std::isfinite(p)) throw DomainError("p-logarithmic mean requires finite p");
  if (p == -1.0) return logarithmic(a, b);
  if (p == 0.0) return identric(a, b);
  if (ordered_equal(a, b)) return a;
  // b^{p+1} - a^{p+1} = a^{p+1} expm1((p+1) ln(b/a))
  const double u = log_ratio(a, b);
  const double rel = (b - a) / a;
  const double inner = std::expm1((p + 1.0) * u) / ((p + 1.0) * rel);
  return a * std::pow(inner, 1.0 / p);
}

double mean(MeanKind kind, double a, double b, double p) {
  switch (kind) {
    case MeanKind::A: return arithmetic(a, b);
    case MeanKind::G: return geometric(a, b);
    case MeanKind::H: return harmonic(a, b);
    case MeanKind::L: return logarithmic(a, b);
    case MeanKind::I: return identric(a, b);
    case MeanKind::Lp: return p_logarithmic(a, b, p);
  }
  throw DomainError("unknown mean kind");
}

double monomial_average(double a, double b, int n) {
  require_positive(a, b);
  if (n == -1 || n == 0) throw DomainError("monomial_average requires n not in {-1, 0}");
  if (ordered_equal(a, b)) return std::pow(a, n);
  const double u = log_ratio(a, b);
  const double rel = (b - a) / a;
  return std::pow(a, n) * std::expm1((n + 1.0) * u) / ((n + 1.0) * rel);
}

bool chain_check(double a, double b) {
  const double h = harmonic(a, b);
  const double g = geometric(a, b);
  const double l = logarithmic(a, b);
  const double i = identric(a, b);
  const double m = arithmetic(a, b);
  return h <= g + kChainSlack && g <= l + kChainSlack && l <= i + kChainSlack &&
         i <= m + kChainSlack;
}

BoundReport check_prop_monomial_q1(double a, double b, int n) {
  require_positive(a, b);
  const int k = require_monomial_order(n);
  const Interval iv{a, b};
  const double avg = monomial_average(a, b, n);
  const double am = std::pow(arithmetic(a, b), n);
  const double lhs = std::abs(avg - am);
  const double w = iv.width();
  const double a_mean = arithmetic(std::pow(a, n - 2), std::pow(b, n - 2));
  BoundReport r = make_report(TheoremId::MonomialConvexQ1, monomial(n).id, a, b, lhs,
                              k * w * w / 24.0 * a_mean, cancellation_tol(avg, am));
  r.literal_bound = k * w * w / 48.0 * a_mean;
  return r;
}

BoundReport check_prop_identric(double a, double b, const ConjugatePair& pq) {
  require_positive(a, b);
  const Interval iv{a, b};
  const double ln_a = std::log(arithmetic(a, b));
  const double ln_i = std::log(identric(a, b));
  const double lhs = ln_a - ln_i;
  const double p = pq.p();
  const double q = pq.q();
  const double w = iv.width();
  // [A(a^{2q}, b^{2q})]^{1/q} = b^2 ((1 + (a/b)^{2q}) / 2)^{1/q}
  const double pm = b * b * std::pow(0.5 * (1.0 + std::pow(a / b, 2.0 * q)), 1.0 / q);
  const double bound = w * w / (8.0 * a * a * b * b * std::pow(2.0 * p + 1.0, 1.0 / p)) * pm;
  BoundReport r = make_report(TheoremId::IdentricHolder, "neg_log", a, b, lhs, bound,
                              cancellation_tol(ln_a, ln_i));
  r.exponents = pq;
  r.q = q;
  return r;
}

BoundReport check_prop_monomial_pm(double a, double b, int n, double q) {
  require_positive(a, b);
  const int k = require_monomial_order(n);
  if (!(q > 1.0) || !std::isfinite(q)) throw DomainError("this inequality requires q > 1");
  const Interval iv{a, b};
  const double avg = monomial_average(a, b, n);
  const double am = std::pow(arithmetic(a, b), n);
  const double w = iv.width();
  const double pm = bounds::power_mean(std::pow(a, n - 2), std::pow(b, n - 2), q);
  BoundReport r = make_report(TheoremId::MonomialPowerMean, monomial(n).id, a, b,
                              std::abs(avg - am), k * w * w / 24.0 * pm,
                              cancellation_tol(avg, am));
  r.q = q;
  return r;
}

BoundReport check_prop_reciprocal_pm(double a, double b, double q) {
  require_positive(a, b);
  if (!(q > 1.0) || !std::isfinite(q)) throw DomainError("this inequality requires q > 1");
  const Interval iv{a, b};
  const double inv_l = 1.0 / logarithmic(a, b);
  const double inv_a = 1.0 / arithmetic(a, b);
  const double w = iv.width();
  // 2^{(q-1)/q} [a^{3q} + b^{3q}]^{1/q} / (a^3 b^3)
  //   = 2^{(q-1)/q} (1 + (a/b)^{3q})^{1/q} / a^3
  const double factor =
      std::pow(2.0, (q - 1.0) / q) * std::pow(1.0 + std::pow(a / b, 3.0 * q), 1.0 / q) / (a * a * a);
  BoundReport r = make_report(TheoremId::ReciprocalPowerMean, "inv_x", a, b,
                              std::abs(inv_l - inv_a), w * w / 24.0 * factor,
                              cancellation_tol(inv_l, inv_a));
  r.q = q;
  return r;
}

BoundReport check_prop_reciprocal_quasi(double a, double b, double q) {
  if (a <= 0.0 && b >= 0.0) throw DomainError("interval must not contain 0");
  require_positive(a, b);
  if (!(q >= 1.0) || !std::isfinite(q)) throw DomainError("this inequality requires q >= 1");
  const Interval iv{a, b};
  const double inv_l = 1.0 / logarithmic(a, b);
  const double inv_a = 1.0 / arithmetic(a, b);
  const double w = iv.width();
  const double sup = std::max(2.0 / (a * a * a), 2.0 / (b * b * b));
  BoundReport r = make_report(TheoremId::ReciprocalQuasi, "inv_x", a, b, std::abs(inv_l - inv_a),
                              w * w / 24.0 * sup, cancellation_tol(inv_l, inv_a));
  r.q = q;
  return r;
}

BoundReport check_prop_monomial_quasi(double a, double b, int n, const ConjugatePair& pq) {
  require_positive(a, b);
  const int k = require_monomial_order(n);
  const Interval iv{a, b};
  const double avg = monomial_average(a, b, n);
  const double am = std::pow(arithmetic(a, b), n);
  const double w = iv.width();
  const double p = pq.p();
  const double sup = std::max(std::pow(a, n - 2), std::pow(b, n - 2));
  BoundReport r = make_report(TheoremId::MonomialQuasiHolder, monomial(n).id, a, b,
                              std::abs(avg - am),
                              k * w * w / (8.0 * std::pow(2.0 * p + 1.0, 1.0 / p)) * sup,
                              cancellation_tol(avg, am));
  r.exponents = pq;
  r.q = pq.q();
  return r;
}

}  // namespace hh::means
