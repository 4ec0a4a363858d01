#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cesaro/cli.hpp"
#include "cesaro/concave.hpp"
#include "cesaro/duality.hpp"
#include "cesaro/errors.hpp"
#include "cesaro/funcspace.hpp"
#include "cesaro/seqspace.hpp"
#include "cesaro/suites.hpp"

namespace py = pybind11;
using namespace cesaro;

namespace {

FnDomain fn_domain(const std::string& s) {
  if (s == "unit") return FnDomain::unit;
  if (s == "halfline") return FnDomain::half_line;
  throw ArgumentError("domain must be 'unit' or 'halfline', got '" + s + "'");
}

py::dict witness_dict(const DualWitness& w) {
  py::dict d;
  d["value"] = w.value;
  d["g"] = w.g;
  d["pairing"] = w.pairing;
  d["dual_bound"] = w.dual_bound;
  d["violation"] = w.violation;
  d["pivots"] = w.pivots;
  d["active_constraints"] = w.active_constraints;
  if (w.g_fn) d["g_fn"] = *w.g_fn;
  return d;
}

py::object report_dict(const VerifyReport& r) {
  return py::module_::import("json").attr("loads")(r.to_json());
}

}  // namespace

PYBIND11_MODULE(cesaro, m) {
  m.doc() = "Cesaro and Tandori sequence and function spaces";

  auto base = py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", PyExc_IndexError);
  py::register_exception<DegenerateError>(m, "DegenerateError", PyExc_ArithmeticError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);
  (void)base;

  py::class_<ConcaveFn>(m, "ConcaveFn")
      .def_static(
          "power", [](double a, bool unit) { return ConcaveFn::power(a, unit ? Domain::unit_interval : Domain::half_line); },
          py::arg("alpha"), py::arg("unit") = false)
      .def_static(
          "affine",
          [](double c, double s, bool unit) {
            return ConcaveFn::affine(c, s, unit ? Domain::unit_interval : Domain::half_line);
          },
          py::arg("intercept"), py::arg("slope"), py::arg("unit") = false)
      .def_static(
          "piecewise_linear",
          [](const std::vector<std::pair<double, double>>& knots, double tail, bool unit) {
            std::vector<Knot> k;
            for (const auto& [t, v] : knots) k.push_back({t, v});
            return ConcaveFn::piecewise_linear(std::move(k), tail, unit ? Domain::unit_interval : Domain::half_line);
          },
          py::arg("knots"), py::arg("tail_slope") = 0.0, py::arg("unit") = false)
      .def("__call__", &ConcaveFn::eval)
      .def("slope", &ConcaveFn::slope)
      .def("inverse", &ConcaveFn::inverse)
      .def("supremum", &ConcaveFn::supremum)
      .def("bounded", &ConcaveFn::bounded)
      .def("psi", [](const ConcaveFn& phi, double t) { return psi(phi)(t); })
      .def("__repr__", &ConcaveFn::describe);

  m.def("estimate_indices", [](const ConcaveFn& phi) {
    const IndexEstimate e = estimate_indices(phi);
    return py::dict(py::arg("p") = e.p_lower, py::arg("q") = e.q_upper);
  });
  m.def("check_q_less_one", [](const ConcaveFn& phi) {
    const QCheck q = check_q_less_one(phi);
    return py::dict(py::arg("holds") = q.holds, py::arg("best_C") = q.best_C, py::arg("refined_C") = q.refined_C,
                    py::arg("stable") = q.stable, py::arg("divergent") = q.divergent);
  });

  py::class_<StepFn>(m, "StepFn")
      .def(py::init([](std::vector<double> x, std::vector<double> c, const std::string& domain, double length) {
             return StepFn(std::move(x), std::move(c), fn_domain(domain), length);
           }),
           py::arg("breakpoints"), py::arg("values"), py::arg("domain") = "unit", py::arg("length") = kDefaultLength)
      .def_property_readonly("breakpoints", &StepFn::breakpoints)
      .def_property_readonly("values", &StepFn::values)
      .def("__call__", &StepFn::eval)
      .def("integral_abs", &StepFn::integral_abs)
      .def("majorant", [](const StepFn& f) { return majorant_fn(f); })
      .def("rearrange", [](const StepFn& f) { return rearrange_fn(f); })
      .def("__repr__", &StepFn::describe);

  m.def("cesaro", [](const std::vector<double>& a) { return cesaro_seq(a); });
  m.def("copson", [](const std::vector<double>& a) { return copson_seq(a); });
  m.def("majorant", [](const std::vector<double>& a) { return majorant_seq(a); });
  m.def("rearrange", [](const std::vector<double>& a) { return rearrange_seq(a); });

  m.def(
      "norm", [](const std::string& space, const std::vector<double>& a) { return norm_seq(cli::parse_seq_space(space), a); },
      py::arg("space"), py::arg("x"), "Norm of a finite sequence; `space` uses the command-line grammar.");
  m.def(
      "norm",
      [](const std::string& space, const StepFn& f) {
        const FnDomain d = f.domain();
        return norm_fn(cli::parse_fn_space(space, d), f);
      },
      py::arg("space"), py::arg("f"));
  m.def(
      "fundamental", [](const std::string& space, std::size_t n) { return fundamental_seq(cli::parse_seq_space(space), n); },
      py::arg("space"), py::arg("n"));

  m.def(
      "dual_norm",
      [](const std::string& space, const std::vector<double>& a) {
        const auto ball = cli::ball_for_seq(space, a.size());
        if (!ball) throw ArgumentError("no polyhedral unit ball for '" + space + "'");
        return witness_dict(dual_norm(*ball, a));
      },
      py::arg("space"), py::arg("x"));
  m.def(
      "dual_norm",
      [](const std::string& space, const StepFn& f) {
        const auto ball = cli::ball_for_fn(cli::parse_fn_space(space, f.domain()));
        if (!ball) throw ArgumentError("no polyhedral unit ball for '" + space + "'");
        return witness_dict(dual_norm(*ball, f));
      },
      py::arg("space"), py::arg("f"));

  m.def("cesaro_lorentz_norm", &cesaro_lorentz_norm);
  m.def("thm8_weight", &thm8_weight);
  m.def("thm8_pairing", &thm8_pairing);

  m.def("suite_names", &suite_names);
  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed, std::size_t trials) {
        return report_dict(run_suite(suite, seed, trials));
      },
      py::arg("suite"), py::arg("seed") = 1, py::arg("trials") = 0);
  m.def(
      "verify_json",
      [](const std::string& suite, std::uint64_t seed, std::size_t trials) {
        return run_suite(suite, seed, trials).to_json();
      },
      py::arg("suite"), py::arg("seed") = 1, py::arg("trials") = 0);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs cesaro_lab in-process; returns (exit_code, stdout, stderr).");
}
