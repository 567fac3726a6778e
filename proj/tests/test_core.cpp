#include <doctest.h>

#include <cmath>

#include "hh/catalog.hpp"
#include "hh/core.hpp"
#include "hh/errors.hpp"
#include "hh/suites.hpp"

using hh::Interval;

TEST_CASE("interval rejects a >= b") {
  CHECK_THROWS_AS(Interval(1.0, 1.0), hh::DomainError);
  CHECK_THROWS_AS(Interval(2.0, 1.0), hh::DomainError);
  CHECK_THROWS_AS(Interval(0.0, INFINITY), hh::DomainError);
  const Interval iv{1.0, 3.0};
  CHECK(iv.width() == 2.0);
  CHECK(iv.midpoint() == 2.0);
}

TEST_CASE("conjugate_of") {
  CHECK(hh::conjugate_of(2.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(hh::conjugate_of(3.0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(hh::conjugate_of(1.25) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK_THROWS_AS(hh::conjugate_of(1.0), hh::DomainError);
  CHECK_THROWS_AS(hh::conjugate_of(0.5), hh::DomainError);

  hh::suites::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const double p = rng.uniform(1.001, 50.0);
    CHECK(std::abs(hh::conjugate_of(hh::conjugate_of(p)) - p) <= 1e-12 * p);
    const auto pq = hh::ConjugatePair::from_p(p);
    CHECK(std::abs(1.0 / pq.p() + 1.0 / pq.q() - 1.0) <= 1e-12);
  }
  CHECK_THROWS_AS(hh::ConjugatePair(2.0, 3.0), hh::DomainError);
}

TEST_CASE("theorem names round-trip") {
  for (auto id : {hh::TheoremId::ConvexQ1, hh::TheoremId::QuasiMonotone,
                  hh::TheoremId::BaselinePowerMean, hh::TheoremId::MonomialQuasiHolder}) {
    CHECK(hh::theorem_from_string(hh::to_string(id)) == id);
  }
  CHECK_FALSE(hh::theorem_from_string("nope").has_value());
}

TEST_CASE("catalog contents") {
  const auto& cat = hh::builtin_catalog();
  for (const char* id : {"x2", "x3", "x4", "x5", "inv_x", "neg_log", "exp", "affine", "x2_5", "sin"}) {
    CHECK_MESSAGE(hh::find_function(id).has_value(), id);
  }
  CHECK(cat.size() >= 10);

  const auto x2 = *hh::find_function("x2");
  CHECK(x2.d2(-1.7) == 2.0);
  CHECK(x2.d2(3.1) == 2.0);
  CHECK(x2.declared_class == hh::FunctionClass::ConvexAbsD2);

  const auto inv = *hh::find_function("inv_x");
  CHECK(inv.d2(1.5) == doctest::Approx(2.0 / (1.5 * 1.5 * 1.5)));
  CHECK(inv.declared_class == hh::FunctionClass::ConvexAbsD2);
  CHECK_FALSE(inv.domain.contains(Interval{-1.0, 1.0}));
  CHECK(inv.domain.contains(Interval{1.0, 2.0}));

  const auto aff = *hh::find_function("affine");
  CHECK(aff.f(2.0) == 7.0);
  CHECK(aff.d2(0.3) == 0.0);

  CHECK(hh::find_function("x2_5")->declared_class == hh::FunctionClass::QuasiConvexAbsD2);
  CHECK(hh::find_function("sin")->declared_class == hh::FunctionClass::Neither);
}

namespace {

// Central differences with a step scaled to the argument.
void check_derivatives(const hh::TestFunction& fn, double x) {
  const double h1 = 1e-5 * std::max(1.0, std::abs(x));
  const double fd1 = (fn.f(x + h1) - fn.f(x - h1)) / (2.0 * h1);
  const double h2 = 1e-4 * std::max(1.0, std::abs(x));
  const double fd2 = (fn.f(x + h2) - 2.0 * fn.f(x) + fn.f(x - h2)) / (h2 * h2);
  const double d1 = fn.d1(x);
  const double d2 = fn.d2(x);
  CHECK_MESSAGE(std::abs(fd1 - d1) <= std::max(1e-6, 1e-6 * std::abs(d1)), fn.id << " d1 at " << x);
  CHECK_MESSAGE(std::abs(fd2 - d2) <= std::max(1e-6, 1e-6 * std::abs(d2)), fn.id << " d2 at " << x);
}

}  // namespace

TEST_CASE("catalog derivatives agree with finite differences") {
  hh::suites::Rng rng(3);
  for (const auto& fn : hh::builtin_catalog()) {
    for (int i = 0; i < 100; ++i) {
      check_derivatives(fn, rng.uniform(fn.sample_region.a(), fn.sample_region.b()));
    }
  }
}

TEST_CASE("polynomial constructor") {
  const double c[] = {1.0, -2.0, 0.0, 4.0};  // 1 - 2x + 4x^3
  const auto p = hh::polynomial("cubic", c);
  CHECK(p.f(2.0) == doctest::Approx(1.0 - 4.0 + 32.0));
  CHECK(p.d1(2.0) == doctest::Approx(-2.0 + 48.0));
  CHECK(p.d2(2.0) == doctest::Approx(48.0));
  CHECK(p.declared_class == hh::FunctionClass::Unknown);
  check_derivatives(p, 0.37);
}

TEST_CASE("negative monomials live on the positive reals") {
  const auto fn = hh::monomial(-2);
  CHECK(fn.id == "x-2");
  CHECK(fn.d2(2.0) == doctest::Approx(6.0 / 16.0));
  CHECK_FALSE(fn.domain.contains(0.0));
  check_derivatives(fn, 1.3);
}
