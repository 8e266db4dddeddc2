#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bayesext/cantor.hpp"
#include "bayesext/cli.hpp"
#include "bayesext/dbl/derivation.hpp"
#include "bayesext/dbl/parser.hpp"
#include "bayesext/dbl/search.hpp"
#include "bayesext/error.hpp"
#include "bayesext/io.hpp"
#include "bayesext/prob.hpp"
#include "bayesext/scalar_text.hpp"
#include "bayesext/tower.hpp"

namespace py = pybind11;
using namespace bayesext;

namespace {

template <typename F>
std::string probability_in(const ExtensionTower& tower, const std::map<std::string, std::string>& masses,
                           const std::string& literal) {
  std::map<std::string, F> parsed;
  for (const auto& [label, text] : masses) parsed.emplace(label, parse_scalar<F>(text));
  const Distribution<F> base = base_distribution<F>(tower.base_algebra(), parsed);
  const Element x = parse_tower_element(tower, literal);
  return to_text(prob_of(extend_to(base, tower, tower.require_stage_of(x)), x));
}

std::optional<std::string> lewis(const std::vector<std::string>& labels,
                                 const std::vector<std::map<std::string, std::string>>& dists, const std::string& x,
                                 const std::string& y) {
  const FiniteBooleanAlgebra alg(labels);
  std::vector<Distribution<Rational>> ds;
  for (const auto& masses : dists) {
    std::map<std::string, Rational> parsed;
    for (const auto& [label, text] : masses) parsed.emplace(label, parse_scalar<Rational>(text));
    ds.push_back(base_distribution<Rational>(alg, parsed));
  }
  const auto w = lewis_search(alg, ds, alg.parse_element(x), alg.parse_element(y));
  if (!w) return std::nullopt;
  return alg.print_element(*w);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bayesian extensions of finite Boolean algebras";

  // Later registrations take precedence, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<GrowthLimitExceeded>(m, "GrowthLimitExceeded", PyExc_RuntimeError);

  py::class_<Rational>(m, "Rational")
      .def(py::init([](const std::string& s) { return parse_scalar<Rational>(s); }))
      .def(py::init([](long n) { return Rational(n); }))
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def("__str__", [](const Rational& r) { return to_text(r); })
      .def("__repr__", [](const Rational& r) { return "Rational('" + to_text(r) + "')"; });

  py::class_<EpsScalar>(m, "EpsScalar")
      .def(py::init([](const std::string& s) { return parse_scalar<EpsScalar>(s); }))
      .def(py::init([](long n) { return EpsScalar(n); }))
      .def_static("eps", &EpsScalar::eps)
      .def("standard_part", &EpsScalar::standard_part)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def("__str__", [](const EpsScalar& r) { return to_text(r); })
      .def("__repr__", [](const EpsScalar& r) { return "EpsScalar('" + to_text(r) + "')"; });

  py::class_<ExtensionTower>(m, "Tower")
      .def(py::init([](std::vector<std::string> labels, std::size_t max_atoms) {
             return ExtensionTower(std::move(labels), TowerOptions{max_atoms});
           }),
           py::arg("labels"), py::arg("max_atoms") = 4096)
      .def_static("from_json", [](const std::string& text) { return tower_from_json(text); })
      .def("to_json", [](const ExtensionTower& t) { return tower_to_json(t); })
      .def_property_readonly("stage_count", &ExtensionTower::stage_count)
      .def("stage_size", [](const ExtensionTower& t, std::size_t i) { return t.stage(i).size(); })
      .def("stage_atoms",
           [](const ExtensionTower& t, std::size_t i) { return t.print(t.algebra(i).top()); })
      .def(
          "extend",
          [](ExtensionTower& t, const std::string& b) {
            return t.extend(parse_tower_element(t, b)).index;
          },
          py::arg("element"))
      .def(
          "conditional",
          [](ExtensionTower& t, const std::string& x, const std::string& y) {
            const Element ex = parse_tower_element(t, x);
            const Element ey = parse_tower_element(t, y);
            return t.print_literal(t.conditional(ex, ey));
          },
          py::arg("x"), py::arg("y"))
      .def("fork", [](const ExtensionTower& t) { return ExtensionTower(t); })
      .def(
          "probability",
          [](const ExtensionTower& t, const std::map<std::string, std::string>& masses, const std::string& x,
             const std::string& field) {
            if (field == "rational") return probability_in<Rational>(t, masses, x);
            if (field == "eps") return probability_in<EpsScalar>(t, masses, x);
            throw ValidationError("unknown field '" + field + "'");
          },
          py::arg("masses"), py::arg("element"), py::arg("field") = "rational");

  m.def("lewis_search", &lewis, py::arg("labels"), py::arg("distributions"), py::arg("x"), py::arg("y"),
        "An element z of the base algebra with P(z) = P(y | x) under every distribution, or None.");
  m.def("cantor_pair", &cantor_pair);
  m.def("cantor_unpair", &cantor_unpair);

  m.def("normalize_sequent", [](const std::string& s) { return dbl::print_sequent(dbl::parse_sequent(s)); });
  m.def("find_counterexample", [](const std::string& s) -> std::optional<std::string> {
    const dbl::Sequent seq = dbl::parse_sequent(s);
    const dbl::SearchResult r = dbl::search_counterexample(seq);
    if (!r.counterexample) return std::nullopt;
    return r.counterexample->describe(seq);
  });
  m.def("check_derivation", [](const std::string& json_text) {
    const dbl::DerivationReport r = dbl::check_derivation(dbl::parse_derivation(json_text));
    return py::make_tuple(r.valid(), r.to_string());
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
