#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hh/bounds_convex.hpp"
#include "hh/bounds_quasiconvex.hpp"
#include "hh/catalog.hpp"
#include "hh/certifier.hpp"
#include "hh/errors.hpp"
#include "hh/identity.hpp"
#include "hh/kernel.hpp"
#include "hh/means.hpp"
#include "hh/oracle.hpp"
#include "hh/suites.hpp"
#include "hh/theorems.hpp"

namespace py = pybind11;

namespace {

hh::TestFunction lookup(const std::string& id) {
  auto fn = hh::find_function(id);
  if (!fn) throw py::key_error("unknown function '" + id + "'");
  return *fn;
}

}  // namespace

PYBIND11_MODULE(hhbounds, m) {
  m.doc() = "Midpoint-gap bounds, special means and certified midpoint integration";

  py::register_exception<hh::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<hh::HypothesisError>(m, "HypothesisError", PyExc_RuntimeError);
  py::register_exception<hh::ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<hh::EvaluationError>(m, "EvaluationError", PyExc_ArithmeticError);

  py::class_<hh::Interval>(m, "Interval")
      .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
      .def_property_readonly("a", &hh::Interval::a)
      .def_property_readonly("b", &hh::Interval::b)
      .def_property_readonly("width", &hh::Interval::width)
      .def_property_readonly("midpoint", &hh::Interval::midpoint)
      .def("__repr__", [](const hh::Interval& iv) {
        return "Interval(" + std::to_string(iv.a()) + ", " + std::to_string(iv.b()) + ")";
      });

  py::enum_<hh::FunctionClass>(m, "FunctionClass")
      .value("ConvexAbsD2", hh::FunctionClass::ConvexAbsD2)
      .value("QuasiConvexAbsD2", hh::FunctionClass::QuasiConvexAbsD2)
      .value("Neither", hh::FunctionClass::Neither)
      .value("Unknown", hh::FunctionClass::Unknown);

  py::class_<hh::TestFunction>(m, "TestFunction")
      .def_readonly("id", &hh::TestFunction::id)
      .def_readonly("declared_class", &hh::TestFunction::declared_class)
      .def_readonly("sample_region", &hh::TestFunction::sample_region)
      .def("f", [](const hh::TestFunction& fn, double x) { return fn.f(x); })
      .def("d1", [](const hh::TestFunction& fn, double x) { return fn.d1(x); })
      .def("d2", [](const hh::TestFunction& fn, double x) { return fn.d2(x); });

  m.def("catalog_ids", [] {
    std::vector<std::string> ids;
    for (const auto& fn : hh::builtin_catalog()) ids.push_back(fn.id);
    return ids;
  });
  m.def("function", &lookup, py::arg("id"));
  m.def("polynomial",
        [](const std::string& id, const std::vector<double>& coeffs) {
          return hh::polynomial(id, coeffs);
        },
        py::arg("id"), py::arg("coeffs"));

  m.def("conjugate_of", &hh::conjugate_of, py::arg("p"));
  py::class_<hh::ConjugatePair>(m, "ConjugatePair")
      .def(py::init<double, double>(), py::arg("p"), py::arg("q"))
      .def_static("from_p", &hh::ConjugatePair::from_p)
      .def_static("from_q", &hh::ConjugatePair::from_q)
      .def_property_readonly("p", &hh::ConjugatePair::p)
      .def_property_readonly("q", &hh::ConjugatePair::q);

  py::class_<hh::BoundReport>(m, "BoundReport")
      .def_property_readonly("theorem",
                             [](const hh::BoundReport& r) { return std::string(hh::to_string(r.theorem_id)); })
      .def_readonly("function_id", &hh::BoundReport::function_id)
      .def_readonly("interval", &hh::BoundReport::interval)
      .def_readonly("q", &hh::BoundReport::q)
      .def_readonly("bound", &hh::BoundReport::bound)
      .def_readonly("true_gap", &hh::BoundReport::true_gap)
      .def_readonly("slack", &hh::BoundReport::slack)
      .def_readonly("valid", &hh::BoundReport::valid)
      .def_readonly("literal_bound", &hh::BoundReport::literal_bound);

  // oracle
  py::class_<hh::oracle::QuadratureResult>(m, "QuadratureResult")
      .def_readonly("value", &hh::oracle::QuadratureResult::value)
      .def_readonly("est_error", &hh::oracle::QuadratureResult::est_error)
      .def_readonly("evaluations", &hh::oracle::QuadratureResult::evaluations);
  m.def("integrate", &hh::oracle::integrate, py::arg("fn"), py::arg("interval"), py::arg("tol"));
  m.def("midpoint_gap",
        [](const std::string& id, const hh::Interval& iv, double tol) {
          return hh::oracle::midpoint_gap(lookup(id), iv, tol);
        },
        py::arg("function"), py::arg("interval"), py::arg("tol") = 1e-12);
  m.def("check_convex_abs_d2",
        [](const std::string& id, const hh::Interval& iv, int grid) {
          return hh::oracle::check_convex_abs_d2(lookup(id), iv, grid);
        },
        py::arg("function"), py::arg("interval"), py::arg("grid") = 64);
  m.def("check_quasiconvex_abs_d2",
        [](const std::string& id, const hh::Interval& iv, int grid) {
          return hh::oracle::check_quasiconvex_abs_d2(lookup(id), iv, grid);
        },
        py::arg("function"), py::arg("interval"), py::arg("grid") = 64);
  m.def("sup_abs_d2",
        [](const std::string& id, const hh::Interval& iv) {
          const auto s = hh::oracle::sup_abs_d2(lookup(id), iv);
          return py::make_tuple(s.value, s.interior_exceeds);
        },
        py::arg("function"), py::arg("interval"));

  // kernel
  m.def("kernel_m", &hh::kernel::m, py::arg("t"));
  m.def("lp_norm_integral", &hh::kernel::lp_norm_integral, py::arg("p"));
  m.def("weighted_moment", &hh::kernel::weighted_moment);

  // identity
  m.def("identity_rhs",
        [](const std::string& id, const hh::Interval& iv, double tol) {
          return hh::identity::identity_rhs(lookup(id), iv, tol);
        },
        py::arg("function"), py::arg("interval"), py::arg("tol") = 1e-12);
  m.def("identity_residual",
        [](const std::string& id, const hh::Interval& iv, double tol) {
          return hh::identity::identity_residual(lookup(id), iv, tol);
        },
        py::arg("function"), py::arg("interval"), py::arg("tol") = 1e-12);

  // bounds
  m.def("bound_convex_q1", &hh::bounds::bound_convex_q1);
  m.def("bound_convex_holder", &hh::bounds::bound_convex_holder);
  m.def("bound_convex_powermean", &hh::bounds::bound_convex_powermean);
  m.def("baseline_first_derivative", &hh::bounds::baseline_first_derivative);
  m.def("constant_comparison", [](double p) {
    const auto c = hh::bounds::constant_comparison(p);
    return py::make_tuple(c.power_mean_constant, c.holder_constant, c.power_mean_smaller);
  });
  m.def("bound_quasi_q1", &hh::bounds::bound_quasi_q1);
  m.def("bound_quasi_holder", &hh::bounds::bound_quasi_holder);
  m.def("bound_quasi_powermean", &hh::bounds::bound_quasi_powermean);
  m.def("apply_theorem",
        [](const std::string& theorem, const std::string& id, const hh::Interval& iv,
           std::optional<double> q) {
          const auto t = hh::theorem_from_string(theorem);
          if (!t) throw py::key_error("unknown theorem '" + theorem + "'");
          return hh::apply_theorem(*t, lookup(id), iv, q);
        },
        py::arg("theorem"), py::arg("function"), py::arg("interval"), py::arg("q") = py::none());

  // means
  m.def("arithmetic_mean", &hh::means::arithmetic);
  m.def("geometric_mean", &hh::means::geometric);
  m.def("harmonic_mean", &hh::means::harmonic);
  m.def("logarithmic_mean", &hh::means::logarithmic);
  m.def("identric_mean", &hh::means::identric);
  m.def("p_logarithmic_mean", &hh::means::p_logarithmic, py::arg("a"), py::arg("b"), py::arg("p"));
  m.def("chain_check", &hh::means::chain_check);
  m.def("check_prop_monomial_q1", &hh::means::check_prop_monomial_q1);
  m.def("check_prop_identric", &hh::means::check_prop_identric);
  m.def("check_prop_monomial_pm", &hh::means::check_prop_monomial_pm);
  m.def("check_prop_reciprocal_pm", &hh::means::check_prop_reciprocal_pm);
  m.def("check_prop_reciprocal_quasi", &hh::means::check_prop_reciprocal_quasi);
  m.def("check_prop_monomial_quasi", &hh::means::check_prop_monomial_quasi);

  // certifier
  py::enum_<hh::certifier::CertTheorem>(m, "CertTheorem")
      .value("ConvexQ1", hh::certifier::CertTheorem::ConvexQ1)
      .value("QuasiQ1", hh::certifier::CertTheorem::QuasiQ1);
  py::class_<hh::certifier::CertifiedIntegral>(m, "CertifiedIntegral")
      .def_readonly("estimate", &hh::certifier::CertifiedIntegral::estimate)
      .def_readonly("error_radius", &hh::certifier::CertifiedIntegral::error_radius)
      .def_readonly("subintervals", &hh::certifier::CertifiedIntegral::subintervals)
      .def_readonly("theorem_used", &hh::certifier::CertifiedIntegral::theorem_used);
  m.def("integrate_certified",
        [](const std::string& id, const hh::Interval& iv, long n,
           hh::certifier::CertTheorem theorem) {
          return hh::certifier::integrate_certified(lookup(id), iv, n, theorem);
        },
        py::arg("function"), py::arg("interval"), py::arg("n"),
        py::arg("theorem") = hh::certifier::CertTheorem::ConvexQ1);
  m.def("refine_to_tolerance",
        [](const std::string& id, const hh::Interval& iv, double tol,
           hh::certifier::CertTheorem theorem) {
          return hh::certifier::refine_to_tolerance(lookup(id), iv, tol, theorem);
        },
        py::arg("function"), py::arg("interval"), py::arg("tol"),
        py::arg("theorem") = hh::certifier::CertTheorem::ConvexQ1);

  m.def("run_suite",
        [](const std::string& suite, std::uint64_t seed, int cases) {
          const auto s = hh::suites::suite_from_string(suite);
          if (!s) throw py::key_error("unknown suite '" + suite + "'");
          py::list out;
          for (const auto& r : hh::suites::run_suite(*s, seed, cases)) {
            py::dict d;
            d["suite"] = r.suite;
            d["function"] = r.function;
            d["interval"] = py::make_tuple(r.interval.a(), r.interval.b());
            d["theorem"] = r.theorem;
            d["bound"] = r.bound;
            d["gap"] = r.gap;
            d["slack"] = r.slack;
            d["pass"] = r.pass;
            out.append(d);
          }
          return out;
        },
        py::arg("suite"), py::arg("seed") = 0, py::arg("cases") = 10);
}
