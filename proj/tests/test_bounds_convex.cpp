#include <doctest.h>

#include <cmath>

#include "hh/bounds_convex.hpp"
#include "hh/catalog.hpp"
#include "hh/errors.hpp"
#include "hh/oracle.hpp"
#include "hh/suites.hpp"
#include "hh/theorems.hpp"

using hh::Interval;
namespace bounds = hh::bounds;

TEST_CASE("bound_convex_q1") {
  CHECK(bounds::bound_convex_q1(Interval{0, 1}, 2, 2) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
  CHECK(bounds::bound_convex_q1(Interval{0, 1}, 0, 12) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(bounds::bound_convex_q1(Interval{1, 2}, 6, 12) == doctest::Approx(0.375).epsilon(1e-15));
  CHECK_THROWS_AS(bounds::bound_convex_q1(Interval{0, 1}, -1, 2), hh::DomainError);
}

TEST_CASE("bound_convex_holder") {
  const auto two = hh::ConjugatePair::from_p(2.0);
  // sqrt(72)/(8 sqrt 5) and 2/(8 sqrt 5), mpmath
  CHECK(bounds::bound_convex_holder(Interval{0, 1}, 0, 12, two) ==
        doctest::Approx(0.474341649025256900).epsilon(1e-14));
  CHECK(bounds::bound_convex_holder(Interval{0, 1}, 2, 2, two) ==
        doctest::Approx(0.111803398874989485).epsilon(1e-14));
  CHECK(bounds::bound_convex_holder(Interval{0, 1}, 0, 0, hh::ConjugatePair::from_p(7.0)) == 0.0);
}

TEST_CASE("bound_convex_powermean") {
  CHECK(bounds::bound_convex_powermean(Interval{0, 1}, 0, 12, 2) ==
        doctest::Approx(0.353553390593273762).epsilon(1e-14));
  CHECK(bounds::bound_convex_powermean(Interval{0, 1}, 2, 2, 7) ==
        doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  CHECK(bounds::bound_convex_powermean(Interval{1, 2}, 6, 12, 1) == 0.375);
  CHECK_THROWS_AS(bounds::bound_convex_powermean(Interval{0, 1}, 1, 1, 0.5), hh::DomainError);
}

TEST_CASE("baseline_first_derivative") {
  CHECK(bounds::baseline_first_derivative(Interval{0, 1}, 0, 2, 1) == 0.25);
  CHECK(bounds::baseline_first_derivative(Interval{0, 1}, 1, 1, 3) == doctest::Approx(0.25));
  CHECK(bounds::baseline_first_derivative(Interval{0, 0.5}, 0, 1, 1) == 0.0625);
  CHECK_THROWS_AS(bounds::baseline_first_derivative(Interval{0, 1}, 1, 1, 0.9), hh::DomainError);
}

TEST_CASE("baseline is looser than the second-derivative bound for x^2 on [0,1]") {
  const double second = bounds::bound_convex_q1(Interval{0, 1}, 2, 2);
  const double first = bounds::baseline_first_derivative(Interval{0, 1}, 0, 2, 1);
  CHECK(second < first);
}

TEST_CASE("constant_comparison") {
  auto c = bounds::constant_comparison(2.0);
  CHECK(c.power_mean_constant == doctest::Approx(1.0 / 24.0));
  CHECK(c.holder_constant == doctest::Approx(0.0559016994374947424).epsilon(1e-14));
  CHECK(c.power_mean_smaller);

  c = bounds::constant_comparison(1.01);
  CHECK(c.holder_constant == doctest::Approx(0.0418461602680969572).epsilon(1e-12));
  CHECK(c.power_mean_smaller);

  c = bounds::constant_comparison(50.0);
  CHECK(c.holder_constant == doctest::Approx(0.113978670152789757).epsilon(1e-12));
  CHECK(c.power_mean_smaller);

  CHECK_THROWS_AS(bounds::constant_comparison(1.0), hh::DomainError);
}

TEST_CASE("power-mean form reduces to q = 1 bit for bit") {
  hh::suites::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const Interval iv = rng.subinterval(Interval{-5, 5});
    const double x = rng.uniform(0, 100);
    const double y = rng.uniform(0, 100);
    CHECK(bounds::bound_convex_powermean(iv, x, y, 1.0) == bounds::bound_convex_q1(iv, x, y));
  }
}

TEST_CASE("power-mean bound never exceeds the Hölder bound") {
  hh::suites::Rng rng(43);
  const Interval iv{0, 1};
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.uniform(0, 50);
    const double y = rng.uniform(0, 50);
    const double q = 1.0 + 9.0 * (1.0 - rng.unit());
    const auto pq = hh::ConjugatePair::from_q(q);
    CHECK(bounds::bound_convex_powermean(iv, x, y, q) <=
          bounds::bound_convex_holder(iv, x, y, pq) + 1e-12);
  }
}

TEST_CASE("bounds are nondecreasing in q") {
  hh::suites::Rng rng(47);
  const Interval iv{0, 2};
  for (int i = 0; i < 200; ++i) {
    const double x = rng.uniform(0, 20);
    const double y = rng.uniform(0, 20);
    double prev = 0.0;
    for (double q = 1.0; q <= 10.0; q += 0.25) {
      const double v = bounds::bound_convex_powermean(iv, x, y, q);
      CHECK(v >= prev * (1.0 - 1e-14));
      prev = v;
    }
  }
}

TEST_CASE("sharpness for linear f''") {
  hh::suites::Rng rng(53);
  const auto x2 = *hh::find_function("x2");
  const auto x3 = *hh::find_function("x3");
  for (int i = 0; i < 50; ++i) {
    const Interval a = rng.subinterval(Interval{-3, 3});
    const auto r2 = hh::apply_theorem(hh::TheoremId::ConvexQ1, x2, a);
    CHECK(std::abs(r2.slack) <= 1e-10);
    // |f''| = 6|x| is linear only away from 0.
    const Interval b = rng.subinterval(Interval{0, 3});
    const auto r3 = hh::apply_theorem(hh::TheoremId::ConvexQ1, x3, b);
    CHECK(std::abs(r3.slack) <= 1e-10);
  }
}

TEST_CASE("convex bounds hold on the catalog") {
  hh::suites::Rng rng(59);
  for (const auto& fn : hh::builtin_catalog()) {
    for (auto id : {hh::TheoremId::ConvexQ1, hh::TheoremId::ConvexHolder,
                    hh::TheoremId::ConvexPowerMean, hh::TheoremId::BaselineQ1,
                    hh::TheoremId::BaselinePowerMean}) {
      for (int i = 0; i < 40; ++i) {
        const Interval iv = rng.subinterval(fn.sample_region);
        const double q = 1.0 + 5.0 * (1.0 - rng.unit());
        if (!hh::hypothesis_holds(id, fn, iv, q)) continue;
        const auto r = hh::apply_theorem(id, fn, iv, q);
        CHECK_MESSAGE(r.valid, fn.id << " " << hh::to_string(id) << " slack " << r.slack);
      }
    }
  }
}

TEST_CASE("apply_theorem rejects out-of-domain intervals and non-function theorems") {
  const auto inv = *hh::find_function("inv_x");
  CHECK_THROWS_AS(hh::apply_theorem(hh::TheoremId::ConvexQ1, inv, Interval{-1, 1}),
                  hh::DomainError);
  CHECK_THROWS_AS(hh::apply_theorem(hh::TheoremId::IdentricHolder, inv, Interval{1, 2}),
                  hh::DomainError);
  CHECK_THROWS_AS(hh::apply_theorem(hh::TheoremId::ConvexHolder, inv, Interval{1, 2}, 1.0),
                  hh::DomainError);
}
