// hh: command-line front end for the midpoint-gap bounds, special means and
// certified midpoint integration.
//
// Exit codes: 0 pass, 1 property violation, 2 usage or domain error,
// 3 class-hypothesis check failure.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hh/catalog.hpp"
#include "hh/certifier.hpp"
#include "hh/errors.hpp"
#include "hh/means.hpp"
#include "hh/oracle.hpp"
#include "hh/suites.hpp"
#include "hh/theorems.hpp"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitHypothesis = 3;

struct OutputFormat {
  bool csv = false;
  bool json = true;
};

std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Writes one object per line. In CSV mode the first row is the sorted key list.
class LineWriter {
public:
  explicit LineWriter(const OutputFormat& fmt) : csv_(fmt.csv) {}

  void write(const json& obj) {
    if (!csv_) {
      std::cout << obj.dump() << '\n';
      return;
    }
    if (!header_done_) {
      bool first = true;
      for (const auto& item : obj.items()) {
        std::cout << (first ? "" : ",") << item.key();
        first = false;
      }
      std::cout << '\n';
      header_done_ = true;
    }
    bool first = true;
    for (const auto& item : obj.items()) {
      const std::string cell = csv_cell(item.value());
      const bool quote = cell.find(',') != std::string::npos;
      std::cout << (first ? "" : ",") << (quote ? "\"" + cell + "\"" : cell);
      first = false;
    }
    std::cout << '\n';
  }

private:
  bool csv_;
  bool header_done_ = false;
};

json interval_json(const hh::Interval& iv) { return json::array({iv.a(), iv.b()}); }

void add_format_flags(CLI::App* cmd, OutputFormat& fmt) {
  cmd->add_flag("--json", fmt.json, "Emit JSON lines (default)");
  cmd->add_flag("--csv", fmt.csv, "Emit CSV with a header row");
}

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << '\n';
  return kExitUsage;
}

int run_verify(const std::string& suite_name, std::uint64_t seed, int cases,
               const OutputFormat& fmt) {
  const auto suite = hh::suites::suite_from_string(suite_name);
  if (!suite) return usage_error("unknown suite '" + suite_name + "'");
  if (cases < 1) return usage_error("--cases must be at least 1");

  const auto records = hh::suites::run_suite(*suite, seed, cases);
  LineWriter out(fmt);
  bool all_pass = true;
  for (const auto& r : records) {
    all_pass = all_pass && r.pass;
    out.write(json{{"suite", r.suite},
                   {"function", r.function},
                   {"interval", interval_json(r.interval)},
                   {"theorem", r.theorem},
                   {"bound", r.bound},
                   {"gap", r.gap},
                   {"slack", r.slack},
                   {"pass", r.pass}});
  }
  return all_pass ? kExitPass : kExitViolation;
}

int run_bound(const std::string& function_id, double a, double b, const std::string& theorem_name,
              std::optional<double> q, std::optional<double> p, const OutputFormat& fmt) {
  const auto fn = hh::find_function(function_id);
  if (!fn) return usage_error("unknown function '" + function_id + "'");
  const auto theorem = hh::theorem_from_string(theorem_name);
  if (!theorem || !hh::is_function_theorem(*theorem)) {
    return usage_error("unknown theorem '" + theorem_name + "'");
  }
  if (p) {
    if (q) return usage_error("give at most one of --p and --q");
    q = hh::conjugate_of(*p);
  }
  const hh::Interval iv{a, b};
  if (!fn->domain.contains(iv)) return usage_error("interval lies outside the domain of " + fn->id);
  if (!hh::hypothesis_holds(*theorem, *fn, iv, q.value_or(2.0))) {
    std::cerr << "class check failed: hypothesis of " << theorem_name << " refuted for "
              << function_id << " on [" << a << ", " << b << "]\n";
    return kExitHypothesis;
  }
  const hh::BoundReport r = hh::apply_theorem(*theorem, *fn, iv, q);
  json obj{{"theorem", std::string(hh::to_string(r.theorem_id))},
           {"bound", r.bound},
           {"true_gap", r.true_gap},
           {"slack", r.slack},
           {"valid", r.valid}};
  LineWriter(fmt).write(obj);
  return r.valid ? kExitPass : kExitViolation;
}

int run_means(double a, double b, double p, const OutputFormat& fmt) {
  namespace m = hh::means;
  json obj{{"A", m::arithmetic(a, b)},
           {"G", m::geometric(a, b)},
           {"H", m::harmonic(a, b)},
           {"L", m::logarithmic(a, b)},
           {"I", m::identric(a, b)},
           {"Lp", m::p_logarithmic(a, b, p)},
           {"p", p},
           {"chain", m::chain_check(a, b)}};
  LineWriter(fmt).write(obj);
  return obj["chain"].get<bool>() ? kExitPass : kExitViolation;
}

int run_certify(const std::string& function_id, double a, double b, double tol,
                const std::string& theorem_name, const OutputFormat& fmt) {
  const auto fn = hh::find_function(function_id);
  if (!fn) return usage_error("unknown function '" + function_id + "'");
  if (!(tol > 0.0)) return usage_error("tolerance must be positive");
  const hh::Interval iv{a, b};
  if (!fn->domain.contains(iv)) return usage_error("interval lies outside the domain of " + fn->id);

  using hh::certifier::CertTheorem;
  CertTheorem theorem = fn->declared_class == hh::FunctionClass::QuasiConvexAbsD2
                            ? CertTheorem::QuasiQ1
                            : CertTheorem::ConvexQ1;
  if (theorem_name == "convex_q1") {
    theorem = CertTheorem::ConvexQ1;
  } else if (theorem_name == "quasi_q1") {
    theorem = CertTheorem::QuasiQ1;
  } else if (!theorem_name.empty()) {
    return usage_error("certify supports convex_q1 or quasi_q1, got '" + theorem_name + "'");
  }

  const auto cert = hh::certifier::refine_to_tolerance(*fn, iv, tol, theorem);
  const auto truth = hh::oracle::integrate(fn->f, iv, 1e-13 * std::max(1.0, iv.width()));
  const double rounding =
      64.0 * std::numeric_limits<double>::epsilon() * std::abs(truth.value) + truth.est_error;
  const bool enclosed = std::abs(cert.estimate - truth.value) <= cert.error_radius + rounding;
  LineWriter(fmt).write(json{{"estimate", cert.estimate},
                             {"error_radius", cert.error_radius},
                             {"n", cert.subintervals},
                             {"theorem", std::string(hh::certifier::to_string(cert.theorem_used))},
                             {"oracle_value", truth.value},
                             {"enclosed", enclosed}});
  return enclosed ? kExitPass : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Midpoint-gap bounds for functions with convex or quasi-convex |f''|"};
  app.require_subcommand(1);
  OutputFormat fmt;

  std::string suite = "all";
  std::uint64_t seed = 0;
  int cases = 100;
  auto* verify = app.add_subcommand("verify", "Run a verification suite over the catalog");
  verify->add_option("--suite", suite, "identity|convex|quasiconvex|means|all");
  verify->add_option("--seed", seed, "Seed of the 64-bit Mersenne Twister");
  verify->add_option("--cases", cases, "Random subintervals per function and theorem");
  add_format_flags(verify, fmt);

  std::string function_id;
  std::string theorem;
  double a = 0.0;
  double b = 0.0;
  std::optional<double> q;
  std::optional<double> p;
  auto* bound = app.add_subcommand("bound", "Evaluate one bound against the true midpoint gap");
  bound->add_option("function", function_id)->required();
  bound->add_option("a", a)->required();
  bound->add_option("b", b)->required();
  bound->add_option("theorem", theorem)->required();
  bound->add_option("--q", q, "Exponent q of the power-mean and Hölder forms");
  bound->add_option("--p", p, "Hölder exponent p (q is derived)");
  add_format_flags(bound, fmt);

  double lp_order = 2.0;
  auto* means = app.add_subcommand("means", "Print the special means of a and b");
  means->add_option("a", a)->required();
  means->add_option("b", b)->required();
  means->add_option("--p", lp_order, "Order of the p-logarithmic mean");
  add_format_flags(means, fmt);

  double tol = 0.0;
  std::string cert_theorem;
  auto* certify = app.add_subcommand("certify", "Certified composite midpoint integral");
  certify->add_option("function", function_id)->required();
  certify->add_option("a", a)->required();
  certify->add_option("b", b)->required();
  certify->add_option("tol", tol)->required();
  certify->add_option("--theorem", cert_theorem, "convex_q1 or quasi_q1");
  add_format_flags(certify, fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return run_verify(suite, seed, cases, fmt);
    if (*bound) return run_bound(function_id, a, b, theorem, q, p, fmt);
    if (*means) return run_means(a, b, lp_order, fmt);
    if (*certify) return run_certify(function_id, a, b, tol, cert_theorem, fmt);
  } catch (const hh::HypothesisError& e) {
    std::cerr << e.what() << '\n';
    return kExitHypothesis;
  } catch (const hh::DomainError& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}
