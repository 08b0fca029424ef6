#include "integrable/psdo.hpp"
#include "integrable/shift.hpp"
#include "integrable/todaop.hpp"
#include "integrable/variational.hpp"
#include "integrable/verify.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace integrable;

namespace {

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::str(r.get_str()));
}

Rational from_py(const py::handle& x) {
  return parse_rational(py::str(x).cast<std::string>());
}

SuperPoly as_poly(const py::handle& x) {
  if (py::isinstance<SuperPoly>(x)) return x.cast<SuperPoly>();
  if (py::isinstance<py::str>(x)) return SuperPoly::parse(x.cast<std::string>());
  return SuperPoly(Coeff(from_py(x)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact KdV and Toda hierarchy computations over Q[eps, 1/eps][q]";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<FloorTooShallow>(m, "FloorTooShallow");
  py::register_exception<NoSolutionInBasis>(m, "NoSolutionInBasis");

  py::class_<SuperPoly>(m, "Poly")
      .def(py::init([](const py::object& x) { return as_poly(x); }), py::arg("value") = 0)
      .def_static("u", &SuperPoly::u, py::arg("jet") = 0)
      .def_static("v", &SuperPoly::v, py::arg("jet") = 0)
      .def_static("theta_u", &SuperPoly::theta_u, py::arg("jet") = 0)
      .def_static("theta_v", &SuperPoly::theta_v, py::arg("jet") = 0)
      .def_static("exp_u", &SuperPoly::exp_u, py::arg("power") = 1)
      .def_static("eps", [](int k) { return SuperPoly(Coeff::eps(k)); }, py::arg("power") = 1)
      .def_static("q", [](int k) { return SuperPoly(Coeff::q(k)); }, py::arg("power") = 1)
      .def("is_zero", &SuperPoly::is_zero)
      .def("odd_degree", &SuperPoly::odd_degree)
      .def("derive", [](const SuperPoly& p, unsigned n) { return derive_t(p, n); }, py::arg("times") = 1)
      .def("truncate", [](const SuperPoly& p, int n) { return truncate_eps(p, n); })
      .def("__add__", [](const SuperPoly& a, const py::object& b) { return a + as_poly(b); })
      .def("__radd__", [](const SuperPoly& a, const py::object& b) { return as_poly(b) + a; })
      .def("__sub__", [](const SuperPoly& a, const py::object& b) { return a - as_poly(b); })
      .def("__rsub__", [](const SuperPoly& a, const py::object& b) { return as_poly(b) - a; })
      .def("__mul__", [](const SuperPoly& a, const py::object& b) { return a * as_poly(b); })
      .def("__rmul__", [](const SuperPoly& a, const py::object& b) { return as_poly(b) * a; })
      .def(-py::self)
      .def("__eq__", [](const SuperPoly& a, const py::object& b) { return a == as_poly(b); })
      .def("__hash__", [](const SuperPoly& a) { return py::hash(py::str(a.str())); })
      .def("__str__", &SuperPoly::str)
      .def("__repr__", [](const SuperPoly& a) { return "Poly('" + a.str() + "')"; });

  m.def("shift", [](const py::object& s, const SuperPoly& p, int n) { return shift(from_py(s), p, n); },
        py::arg("s"), py::arg("p"), py::arg("order"));
  m.def("nabla", &nabla, py::arg("p"), py::arg("order"));
  m.def("Delta", &Delta, py::arg("p"), py::arg("order"));
  m.def("pee", &pee, py::arg("p"), py::arg("order"));
  m.def("bernoulli", [](unsigned n) { return to_fraction(bernoulli(n)); });

  m.def("gelfand_dickii", [](int k, const std::string& method) {
    if (method == "recursion") return gelfand_dickii_recursion(k);
    if (method == "residue") return gelfand_dickii_residue(k);
    throw py::value_error("method must be 'residue' or 'recursion'");
  }, py::arg("k"), py::arg("method") = "residue");
  m.def("kdv_flow", &kdv_flow, py::arg("k"), py::arg("p"));

  py::class_<Functional>(m, "Functional")
      .def(py::init([](const py::object& x) { return Functional(as_poly(x)); }), py::arg("density") = 0)
      .def_property_readonly("density", &Functional::density)
      .def_property_readonly("delta_u", &Functional::du)
      .def_property_readonly("delta_v", &Functional::dv)
      .def_property_readonly("delta_theta_u", &Functional::dtu)
      .def_property_readonly("delta_theta_v", &Functional::dtv)
      .def_property_readonly("degree", &Functional::degree)
      .def("is_zero", &Functional::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def("__mul__", [](const Functional& f, const py::object& c) { return f * from_py(c); })
      .def("__rmul__", [](const Functional& f, const py::object& c) { return f * from_py(c); })
      .def("__eq__", [](const Functional& a, const Functional& b) { return functional_equal(a, b); })
      .def("__str__", &Functional::str)
      .def("__repr__", [](const Functional& f) { return "Functional('" + f.density().str() + "')"; });

  m.def("schouten_bracket", &schouten_bracket, py::arg("f"), py::arg("g"), py::arg("order"));
  m.def("poisson_bracket", &poisson_bracket, py::arg("f"), py::arg("g"), py::arg("h"), py::arg("order"));
  m.def("hamiltonian_vf", [](const Functional& h, const Functional& f, int order) {
    auto c = hamiltonian_vf(h, f, order);
    return py::make_tuple(c.u, c.v);
  }, py::arg("h"), py::arg("f"), py::arg("order"));
  m.def("H", &build_H, py::arg("order"));
  m.def("H0", &build_H0, py::arg("order"));
  m.def("e", &vector_field_e);
  m.def("E", &vector_field_E);
  m.def("g0", &build_g0, py::arg("order"));
  m.def("g1", &build_g1, py::arg("order"));
  m.def("solve_g", [](int k, int order) {
    auto toda = toda_lattice(order);
    Functional prev = build_g0(order);
    for (int j = 1; j <= k; ++j) prev = solve_g(j, prev, toda->hamiltonian(j - 1), order).g;
    return prev;
  }, py::arg("k"), py::arg("order"));

  py::class_<TodaLattice, std::shared_ptr<TodaLattice>>(m, "Toda")
      .def(py::init([](int order) { return std::const_pointer_cast<TodaLattice>(toda_lattice(order)); }),
           py::arg("order") = 8)
      .def_property_readonly("order", &TodaLattice::order)
      .def("p", &TodaLattice::p, py::arg("k"), py::arg("n"), py::call_guard<py::gil_scoped_release>())
      .def("hamiltonian", &TodaLattice::hamiltonian, py::arg("n"), py::call_guard<py::gil_scoped_release>())
      .def("flow_field", [](const TodaLattice& t, int n) {
        auto c = t.flow_field(n);
        return py::make_tuple(c.u, c.v);
      }, py::arg("n"));

  m.def("suite_names", &suite_names);
  m.def("run_suite", [](const std::string& name, int order, std::optional<int> max_n, std::uint64_t seed) {
    VerifyOptions o;
    o.order = order;
    o.max_n = max_n;
    o.seed = seed;
    VerifyReport r;
    {
      py::gil_scoped_release release;
      r = run_suite(name, o);
    }
    return py::module_::import("json").attr("loads")(report_json(r, false));
  }, py::arg("name"), py::arg("order") = 8, py::arg("max_n") = py::none(), py::arg("seed") = 0);
}
