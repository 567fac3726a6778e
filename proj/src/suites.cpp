#include "hh/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <utility>

#include "hh/catalog.hpp"
#include "hh/identity.hpp"
#include "hh/means.hpp"
#include "hh/oracle.hpp"
#include "hh/theorems.hpp"

namespace hh::suites {

namespace {

constexpr double kOracleTol = 1e-12;
constexpr double kMaxQ = 10.0;

CheckRecord from_report(std::string_view suite, const BoundReport& r) {
  return {std::string(suite), r.function_id, r.interval, std::string(to_string(r.theorem_id)),
          r.bound,            r.true_gap,    r.slack,    r.valid};
}

void identity_suite(std::uint64_t seed, int cases, std::vector<CheckRecord>& out) {
  Rng rng(seed);
  for (const auto& fn : builtin_catalog()) {
    std::vector<Interval> ivs{fn.sample_region};
    for (int c = 0; c < cases; ++c) ivs.push_back(rng.subinterval(fn.sample_region));
    for (const auto& iv : ivs) {
      const double lhs = oracle::signed_midpoint_gap(fn, iv, kOracleTol);
      const double rhs = identity::identity_rhs(fn, iv, kOracleTol);
      const double residual = std::abs(lhs - rhs);
      out.push_back({"identity", fn.id, iv, "identity", rhs, lhs, kIdentityTolerance - residual,
                     residual < kIdentityTolerance});
    }
  }
}

// Draws every random quantity up front so that skipped checks never shift the
// stream seen by later ones.
void theorem_suite(std::string_view name, std::span<const TheoremId> theorems,
                   std::uint64_t seed, int cases, std::vector<CheckRecord>& out) {
  Rng rng(seed);
  for (const auto& fn : builtin_catalog()) {
    for (TheoremId id : theorems) {
      std::vector<std::pair<Interval, double>> draws{{fn.sample_region, 2.0}};
      for (int c = 0; c < cases; ++c) {
        const Interval iv = rng.subinterval(fn.sample_region);
        const double q = 1.0 + (kMaxQ - 1.0) * (1.0 - rng.unit());  // (1, 10]
        draws.emplace_back(iv, q);
      }
      for (const auto& [iv, q] : draws) {
        if (!hypothesis_holds(id, fn, iv, q)) continue;
        out.push_back(from_report(name, apply_theorem(id, fn, iv, q, kOracleTol)));
      }
    }
  }
}

void means_suite(std::uint64_t seed, int cases, std::vector<CheckRecord>& out) {
  Rng rng(seed);
  const Interval region{0.1, 5.0};
  constexpr std::array<int, 6> orders{-3, -2, 3, 4, 5, 6};
  for (int c = 0; c < cases; ++c) {
    const Interval iv = rng.subinterval(region);
    const double a = iv.a();
    const double b = iv.b();
    const int n = orders[static_cast<std::size_t>(rng.pick(0, static_cast<int>(orders.size()) - 1))];
    const double q = 1.0 + (kMaxQ - 1.0) * (1.0 - rng.unit());
    const auto pq = ConjugatePair::from_q(q);

    const double h = means::harmonic(a, b);
    const double g = means::geometric(a, b);
    const double l = means::logarithmic(a, b);
    const double i = means::identric(a, b);
    const double m = means::arithmetic(a, b);
    const double step = std::min({g - h, l - g, i - l, m - i});
    out.push_back({"means", "means", iv, "mean_chain", m, h, step, means::chain_check(a, b)});

    for (const BoundReport& r :
         {means::check_prop_monomial_q1(a, b, n), means::check_prop_identric(a, b, pq),
          means::check_prop_monomial_pm(a, b, n, q), means::check_prop_reciprocal_pm(a, b, q),
          means::check_prop_reciprocal_quasi(a, b, q),
          means::check_prop_monomial_quasi(a, b, n, pq)}) {
      out.push_back({"means", r.function_id, r.interval, std::string(to_string(r.theorem_id)),
                     r.bound, r.true_gap, r.slack, r.valid});
    }
  }
}

constexpr std::array kConvexTheorems{TheoremId::ConvexQ1, TheoremId::ConvexHolder,
                                     TheoremId::ConvexPowerMean, TheoremId::BaselineQ1,
                                     TheoremId::BaselinePowerMean};
constexpr std::array kQuasiTheorems{TheoremId::QuasiQ1, TheoremId::QuasiMonotone,
                                    TheoremId::QuasiHolder, TheoremId::QuasiPowerMean};

}  // namespace

Interval Rng::subinterval(const Interval& region) {
  const double min_width = 1e-3 * region.width();
  for (;;) {
    double x = uniform(region.a(), region.b());
    double y = uniform(region.a(), region.b());
    if (x > y) std::swap(x, y);
    if (y - x >= min_width) return Interval{x, y};
  }
}

std::optional<Suite> suite_from_string(std::string_view name) {
  if (name == "identity") return Suite::Identity;
  if (name == "convex") return Suite::Convex;
  if (name == "quasiconvex") return Suite::QuasiConvex;
  if (name == "means") return Suite::Means;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Identity: return "identity";
    case Suite::Convex: return "convex";
    case Suite::QuasiConvex: return "quasiconvex";
    case Suite::Means: return "means";
    case Suite::All: return "all";
  }
  return "?";
}

std::vector<CheckRecord> run_suite(Suite suite, std::uint64_t seed, int cases) {
  std::vector<CheckRecord> out;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Identity) identity_suite(seed, cases, out);
  if (all || suite == Suite::Convex) theorem_suite("convex", kConvexTheorems, seed, cases, out);
  if (all || suite == Suite::QuasiConvex) {
    theorem_suite("quasiconvex", kQuasiTheorems, seed, cases, out);
  }
  if (all || suite == Suite::Means) means_suite(seed, cases, out);
  return out;
}

}  // namespace hh::suites
