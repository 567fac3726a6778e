#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hh/core.hpp"

namespace hh::suites {

/// Platform-independent uniform draws on top of std::mt19937_64 (whose output
/// sequence is fixed by the standard, unlike the std distributions).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// Uniform integer in [lo, hi].
  int pick(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  /// Random subinterval of region no narrower than 1e-3 of its width.
  Interval subinterval(const Interval& region);

private:
  std::mt19937_64 engine_;
};

enum class Suite { Identity, Convex, QuasiConvex, Means, All };

std::optional<Suite> suite_from_string(std::string_view name);
std::string_view to_string(Suite s);

/// One line of verification output.
struct CheckRecord {
  std::string suite;
  std::string function;
  Interval interval{0.0, 1.0};
  std::string theorem;
  double bound = 0.0;
  double gap = 0.0;
  double slack = 0.0;
  bool pass = false;
};

inline constexpr double kIdentityTolerance = 1e-9;
inline constexpr double kValidityTolerance = 1e-9;

/// Runs a suite over the catalog on its sample regions plus `cases` seeded
/// random subintervals per function and theorem. Checks whose class hypothesis
/// the samplers refute are skipped. Records come out in a fixed order.
std::vector<CheckRecord> run_suite(Suite suite, std::uint64_t seed, int cases);

}  // namespace hh::suites
