#include <doctest.h>

#include <cmath>

#include "hh/bounds_convex.hpp"
#include "hh/bounds_quasiconvex.hpp"
#include "hh/catalog.hpp"
#include "hh/errors.hpp"
#include "hh/suites.hpp"
#include "hh/theorems.hpp"

using hh::Interval;
using hh::oracle::Direction;
namespace bounds = hh::bounds;

TEST_CASE("bound_quasi_q1") {
  CHECK(bounds::bound_quasi_q1(Interval{1, 2}, 2, 0.25) == doctest::Approx(1.0 / 12.0));
  CHECK(bounds::bound_quasi_q1(Interval{0, 1}, 5, 5) == doctest::Approx(5.0 / 24.0));
  CHECK(bounds::bound_quasi_q1(Interval{0, 1}, 0, 0) == 0.0);
  CHECK_THROWS_AS(bounds::bound_quasi_q1(Interval{0, 1}, -1, 0), hh::DomainError);
}

TEST_CASE("bound_quasi_monotone") {
  const auto x3 = *hh::find_function("x3");
  const auto inv = *hh::find_function("inv_x");
  const auto x2 = *hh::find_function("x2");
  CHECK(bounds::bound_quasi_monotone(Interval{0, 1}, x3, Direction::Increasing) ==
        doctest::Approx(0.25));
  CHECK(bounds::bound_quasi_monotone(Interval{1, 2}, inv, Direction::Decreasing) ==
        doctest::Approx(1.0 / 12.0));
  const Interval iv{-0.5, 2.5};
  const double expected = iv.width() * iv.width() * 2.0 / 24.0;
  CHECK(bounds::bound_quasi_monotone(iv, x2, Direction::Increasing) == doctest::Approx(expected));
  CHECK(bounds::bound_quasi_monotone(iv, x2, Direction::Decreasing) == doctest::Approx(expected));

  CHECK_THROWS_AS(bounds::bound_quasi_monotone(Interval{1, 2}, inv, Direction::Increasing),
                  hh::HypothesisError);
  CHECK_THROWS_AS(bounds::bound_quasi_monotone(Interval{1, 2}, x3, Direction::Decreasing),
                  hh::HypothesisError);
  // agrees with the sup form on the same data
  CHECK(bounds::bound_quasi_monotone(Interval{1, 2}, inv, Direction::Decreasing) ==
        bounds::bound_quasi_q1(Interval{1, 2}, 2.0, 0.25));
}

TEST_CASE("bound_quasi_holder") {
  const auto two = hh::ConjugatePair::from_p(2.0);
  CHECK(bounds::bound_quasi_holder(Interval{1, 2}, 2, 0.25, two) ==
        doctest::Approx(0.111803398874989485).epsilon(1e-14));
  CHECK(bounds::bound_quasi_holder(Interval{0, 1}, 0, 12, two) ==
        doctest::Approx(0.670820393249936909).epsilon(1e-14));
  CHECK(bounds::bound_quasi_holder(Interval{0, 1}, 0, 0, hh::ConjugatePair::from_p(3)) == 0.0);
}

TEST_CASE("bound_quasi_powermean is q-independent") {
  CHECK(bounds::bound_quasi_powermean(Interval{1, 2}, 2, 0.25, 2) == doctest::Approx(1.0 / 12.0));
  CHECK(bounds::bound_quasi_powermean(Interval{1, 2}, 2, 0.25, 1) == doctest::Approx(1.0 / 12.0));
  CHECK(bounds::bound_quasi_powermean(Interval{0, 1}, 6, 6, 5) == doctest::Approx(0.25));
  CHECK_THROWS_AS(bounds::bound_quasi_powermean(Interval{0, 1}, 6, 6, 0.99), hh::DomainError);

  hh::suites::Rng rng(61);
  for (int i = 0; i < 100; ++i) {
    const Interval iv = rng.subinterval(Interval{-2, 2});
    const double x = rng.uniform(0, 1e3);
    const double y = rng.uniform(0, 1e3);
    const double base = bounds::bound_quasi_powermean(iv, x, y, 1.0);
    for (double q = 1.0; q <= 20.0; q += 0.5) {
      CHECK(std::abs(bounds::bound_quasi_powermean(iv, x, y, q) - base) <= 1e-12 * (1.0 + base));
    }
  }
}

TEST_CASE("quasi power-mean below quasi Hölder, and above the convex q = 1 form") {
  hh::suites::Rng rng(67);
  const Interval iv{0, 1};
  for (int i = 0; i < 500; ++i) {
    const double x = rng.uniform(0, 50);
    const double y = rng.uniform(0, 50);
    const double p = rng.uniform(1.001, 50);
    const auto pq = hh::ConjugatePair::from_p(p);
    CHECK(bounds::bound_quasi_powermean(iv, x, y, pq.q()) <=
          bounds::bound_quasi_holder(iv, x, y, pq));
    CHECK(bounds::bound_quasi_q1(iv, x, y) >= bounds::bound_convex_q1(iv, x, y));
  }
}

TEST_CASE("quasi-convex bounds hold on the catalog") {
  hh::suites::Rng rng(71);
  int checked_quasi_only = 0;
  for (const auto& fn : hh::builtin_catalog()) {
    for (auto id : {hh::TheoremId::QuasiQ1, hh::TheoremId::QuasiMonotone,
                    hh::TheoremId::QuasiHolder, hh::TheoremId::QuasiPowerMean}) {
      for (int i = 0; i < 40; ++i) {
        const Interval iv = rng.subinterval(fn.sample_region);
        const double q = 1.0 + 5.0 * (1.0 - rng.unit());
        if (!hh::hypothesis_holds(id, fn, iv, q)) continue;
        const auto r = hh::apply_theorem(id, fn, iv, q);
        CHECK_MESSAGE(r.valid, fn.id << " " << hh::to_string(id) << " slack " << r.slack);
        if (fn.id == "x2_5") ++checked_quasi_only;
      }
    }
  }
  CHECK(checked_quasi_only > 0);
}
