#include <doctest.h>

#include <cmath>

#include "hh/catalog.hpp"
#include "hh/identity.hpp"
#include "hh/oracle.hpp"
#include "hh/suites.hpp"

using hh::Interval;
namespace id = hh::identity;

namespace {
hh::TestFunction fn(const char* name) { return *hh::find_function(name); }
}  // namespace

TEST_CASE("identity_rhs examples") {
  CHECK(std::abs(id::identity_rhs(fn("x2"), Interval{0, 1}, 1e-12) - 1.0 / 12.0) <= 1e-12);
  CHECK(std::abs(id::identity_rhs(fn("affine"), Interval{0, 1}, 1e-12)) <= 1e-15);
  // (a+b)(b-a)^2/8 for x^3
  CHECK(std::abs(id::identity_rhs(fn("x3"), Interval{1, 2}, 1e-12) - 0.375) <= 1e-12);
  CHECK(std::abs(hh::oracle::midpoint_gap(fn("x3"), Interval{1, 2}) - 0.375) <= 1e-12);
}

TEST_CASE("identity_residual examples") {
  CHECK(id::identity_residual(fn("x4"), Interval{0, 1}, 1e-12) < 1e-9);
  CHECK(id::identity_residual(fn("inv_x"), Interval{1, 2}, 1e-12) < 1e-9);
  CHECK(id::identity_residual(fn("exp"), Interval{-1, 1}, 1e-12) < 1e-9);
}

TEST_CASE("identity holds across the catalog on random subintervals") {
  hh::suites::Rng rng(31);
  for (const auto& f : hh::builtin_catalog()) {
    for (int i = 0; i < 50; ++i) {
      const Interval iv = rng.subinterval(f.sample_region);
      CHECK_MESSAGE(id::identity_residual(f, iv, 1e-12) < 1e-9, f.id);
    }
  }
}

TEST_CASE("identity for a non-catalog polynomial") {
  const double c[] = {0.5, -1.0, 2.0, 0.0, -3.0, 1.0};
  const auto p = hh::polynomial("quintic", c);
  CHECK(id::identity_residual(p, Interval{-1.5, 0.7}, 1e-12) < 1e-9);
}

TEST_CASE("the (b-a)^2/2 coefficient doubles the right-hand side") {
  const Interval unit{0, 1};
  const double printed = id::identity_rhs(fn("x2"), unit, 1e-12, id::Coefficient::AsPrinted);
  CHECK(std::abs(printed - 1.0 / 6.0) <= 1e-12);
  const double residual = id::identity_residual(fn("x2"), unit, 1e-12, id::Coefficient::AsPrinted);
  CHECK(std::abs(residual - 1.0 / 12.0) <= 1e-10);
}
