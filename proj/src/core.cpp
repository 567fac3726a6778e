#include "hh/core.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "hh/errors.hpp"

namespace hh {

Interval::Interval(double a, double b) : a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("interval endpoints must be finite");
  }
  if (!(a < b)) {
    throw DomainError("interval requires a < b");
  }
}

std::string_view to_string(FunctionClass c) {
  switch (c) {
    case FunctionClass::ConvexAbsD2: return "convex_abs_d2";
    case FunctionClass::QuasiConvexAbsD2: return "quasiconvex_abs_d2";
    case FunctionClass::Neither: return "neither";
    case FunctionClass::Unknown: return "unknown";
  }
  return "unknown";
}

double conjugate_of(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw DomainError("conjugate exponent requires 1 < p < inf");
  }
  return p / (p - 1.0);
}

ConjugatePair::ConjugatePair(double p, double q) : p_(p), q_(q) {
  if (!(p > 1.0) || !(q > 1.0) || !std::isfinite(p) || !std::isfinite(q)) {
    throw DomainError("conjugate pair requires p, q > 1");
  }
  if (std::abs(1.0 / p + 1.0 / q - 1.0) > 1e-12) {
    throw DomainError("conjugate pair requires 1/p + 1/q = 1");
  }
}

ConjugatePair ConjugatePair::from_p(double p) { return {p, conjugate_of(p)}; }
ConjugatePair ConjugatePair::from_q(double q) { return {conjugate_of(q), q}; }

namespace {

constexpr std::array<std::pair<TheoremId, std::string_view>, 15> kTheoremNames{{
    {TheoremId::ConvexQ1, "convex_q1"},
    {TheoremId::ConvexHolder, "convex_holder"},
    {TheoremId::ConvexPowerMean, "convex_power_mean"},
    {TheoremId::QuasiQ1, "quasi_q1"},
    {TheoremId::QuasiMonotone, "quasi_monotone"},
    {TheoremId::QuasiHolder, "quasi_holder"},
    {TheoremId::QuasiPowerMean, "quasi_power_mean"},
    {TheoremId::BaselineQ1, "baseline_q1"},
    {TheoremId::BaselinePowerMean, "baseline_power_mean"},
    {TheoremId::MonomialConvexQ1, "monomial_convex_q1"},
    {TheoremId::IdentricHolder, "identric_holder"},
    {TheoremId::MonomialPowerMean, "monomial_power_mean"},
    {TheoremId::ReciprocalPowerMean, "reciprocal_power_mean"},
    {TheoremId::ReciprocalQuasi, "reciprocal_quasi"},
    {TheoremId::MonomialQuasiHolder, "monomial_quasi_holder"},
}};

}  // namespace

std::string_view to_string(TheoremId id) {
  for (const auto& [key, name] : kTheoremNames) {
    if (key == id) return name;
  }
  return "unknown";
}

std::optional<TheoremId> theorem_from_string(std::string_view name) {
  for (const auto& [key, label] : kTheoremNames) {
    if (label == name) return key;
  }
  return std::nullopt;
}

void finalize(BoundReport& report, double tolerance) {
  report.slack = report.bound - report.true_gap;
  report.valid = report.slack >= -tolerance;
}

}  // namespace hh
