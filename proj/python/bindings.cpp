#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcf/errors.hpp"
#include "qcf/json_io.hpp"
#include "qcf/numeric.hpp"
#include "qcf/ramanujan.hpp"
#include "qcf/verify.hpp"

namespace py = pybind11;

namespace {

// Hands JSON to Python through the json module so callers get plain dicts.
py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact convergents of Ramanujan's generalized Rogers-Ramanujan continued fraction";

  py::register_exception<qcf::NotDivisible>(m, "NotDivisible", PyExc_ArithmeticError);
  py::register_exception<qcf::DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);
  py::register_exception<qcf::InvalidRange>(m, "InvalidRange", PyExc_ValueError);
  py::register_exception<qcf::IndexError>(m, "IndexError", PyExc_IndexError);
  py::register_exception<qcf::NonConvergent>(m, "NonConvergent", PyExc_ValueError);
  py::register_exception<qcf::NumericBreakdown>(m, "NumericBreakdown", PyExc_ArithmeticError);

  py::class_<qcf::Polynomial>(m, "Polynomial")
      .def("__str__", &qcf::Polynomial::to_string)
      .def("__repr__", [](const qcf::Polynomial& p) { return "Polynomial(" + p.to_string() + ")"; })
      .def("__eq__", [](const qcf::Polynomial& a, const qcf::Polynomial& b) { return a == b; })
      .def("evaluate", &qcf::Polynomial::evaluate, py::arg("q"), py::arg("lam"), py::arg("b"))
      .def("to_json", [](const qcf::Polynomial& p) { return to_python(qcf::to_json(p)); })
      .def_property_readonly("is_zero", &qcf::Polynomial::is_zero);

  py::class_<qcf::RationalFunction>(m, "RationalFunction")
      .def(py::init<qcf::Polynomial>())
      .def("__str__", &qcf::RationalFunction::to_string)
      .def("__repr__",
           [](const qcf::RationalFunction& r) { return "RationalFunction(" + r.to_string() + ")"; })
      .def("__eq__", [](const qcf::RationalFunction& a, const qcf::RationalFunction& b) { return a == b; })
      .def("__add__", [](const qcf::RationalFunction& a, const qcf::RationalFunction& b) { return a + b; })
      .def("__sub__", [](const qcf::RationalFunction& a, const qcf::RationalFunction& b) { return a - b; })
      .def("__mul__", [](const qcf::RationalFunction& a, const qcf::RationalFunction& b) { return a * b; })
      .def("__truediv__",
           [](const qcf::RationalFunction& a, const qcf::RationalFunction& b) { return a / b; })
      .def_property_readonly("num", &qcf::RationalFunction::num)
      .def_property_readonly("den", &qcf::RationalFunction::den)
      .def("evaluate", &qcf::RationalFunction::evaluate, py::arg("q"), py::arg("lam"), py::arg("b"))
      .def("at_b_zero", &qcf::RationalFunction::at_b_zero)
      .def("to_json", [](const qcf::RationalFunction& r) { return to_python(qcf::to_json(r)); })
      .def_static(
          "from_json",
          [](const py::object& obj) {
            const std::string text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
            return qcf::rational_function_from_json(nlohmann::json::parse(text));
          },
          py::arg("obj"));
  py::implicitly_convertible<qcf::Polynomial, qcf::RationalFunction>();

  m.def("mu", &qcf::mu, py::arg("n"));
  m.def("nu", &qcf::nu, py::arg("n"));
  m.def("g", [](int n, int s) { return qcf::g({n, s}); }, py::arg("n"), py::arg("s"));
  m.def("g_difference", &qcf::g_difference, py::arg("n"), py::arg("s"));
  m.def("convergent", &qcf::convergent, py::arg("n"));
  m.def("asi_u", &qcf::asi_u, py::arg("n"));
  m.def(
      "cf_finite_backward",
      [](int n, bool rogers_ramanujan) {
        return qcf::cf_finite_backward(rogers_ramanujan ? qcf::CFSpec::rogers_ramanujan(n)
                                                        : qcf::CFSpec::generalized(n));
      },
      py::arg("n"), py::arg("rogers_ramanujan") = false);
  m.def(
      "cf_convergents_forward",
      [](int n) {
        py::list out;
        for (const auto& p : qcf::cf_convergents_forward(qcf::CFSpec::generalized(n))) {
          out.append(py::make_tuple(p.j, p.P, p.Q));
        }
        return out;
      },
      py::arg("n"));

  m.def(
      "series_ratio_entry15",
      [](double q, double lam, double b, int K) {
        return qcf::series_ratio_entry15(qcf::NumericPoint(q, lam, b), K);
      },
      py::arg("q"), py::arg("lam"), py::arg("b"), py::arg("K") = 50);
  m.def(
      "cf_numeric",
      [](double q, double lam, double b, int n) { return qcf::cf_numeric(qcf::NumericPoint(q, lam, b), n); },
      py::arg("q"), py::arg("lam"), py::arg("b"), py::arg("n"));
  m.def(
      "convergence_demo",
      [](double q, double lam, double b, int n_max, int K) {
        return to_python(qcf::to_json(qcf::convergence_demo(qcf::NumericPoint(q, lam, b), n_max, K)));
      },
      py::arg("q"), py::arg("lam"), py::arg("b"), py::arg("n_max"), py::arg("K") = 50);

  m.def(
      "verify",
      [](const std::string& suite, int n_max, std::uint64_t seed) {
        if (suite == "all") return to_python(qcf::to_json(qcf::run_all(n_max, seed)));
        return to_python(qcf::to_json(qcf::run_suite(suite, n_max, seed)));
      },
      py::arg("suite"), py::arg("n_max") = 10, py::arg("seed") = 0);
  m.attr("SUITES") = qcf::suite_names();
}
