#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "lbs/io.hpp"
#include "lbs/laws.hpp"
#include "lbs/prelie.hpp"
#include "lbs/subst.hpp"

namespace py = pybind11;
using namespace lbs;

namespace {

using Terms = std::vector<std::pair<std::string, std::string>>;
using Terms2 = std::vector<std::tuple<std::string, std::string, std::string>>;

template <class K>
Terms terms(const LinComb<K>& x) {
  Terms out;
  for (const auto& [k, c] : x) out.emplace_back(to_string(c), to_string(k));
  return out;
}

template <class L, class R>
Terms2 terms(const Tensor2<L, R>& x) {
  Terms2 out;
  for (const auto& [k, c] : x) out.emplace_back(to_string(c), to_string(k.first), to_string(k.second));
  return out;
}

Forest nonplanar(const std::string& s) { return forget_planarity(parse_forest(s)); }

PartitionRule rule_of(const std::string& r) {
  if (r == "lie") return PartitionRule::LieRealizable;
  if (r == "combinatorial") return PartitionRule::Combinatorial;
  throw std::invalid_argument("rule must be lie or combinatorial");
}

std::vector<std::string> enumerate(std::size_t n, const std::string& kind) {
  std::vector<std::string> out;
  auto put = [&](const auto& xs) {
    for (const auto& x : xs) out.push_back(to_string(x));
  };
  if (kind == "planar")
    put(enumerate_planar_trees(n));
  else if (kind == "trees")
    put(enumerate_nonplanar_trees(n));
  else if (kind == "ordered")
    put(enumerate_ordered_forests(n));
  else if (kind == "forests")
    put(enumerate_forests(n));
  else
    throw std::invalid_argument("kind must be planar, trees, ordered or forests");
  return out;
}

std::tuple<int, std::string, std::string> run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"lbs"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<std::invalid_argument>(m, "InputError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("parse_forest", [](const std::string& s) { return to_string(parse_forest(s)); });
  m.def("canonical", [](const std::string& s) { return to_string(nonplanar(s)); });
  m.def("symmetry_factor", [](const std::string& s) { return symmetry_factor(canonicalize(parse_tree(s))); });
  m.def("tree_factorial", [](const std::string& s) { return tree_factorial(parse_tree(s)); });
  m.def("enumerate", &enumerate, py::arg("n"), py::arg("kind") = "ordered");

  m.def("left_graft", [](const std::string& a, const std::string& b) {
    return terms(left_graft(parse_forest(a), parse_forest(b)));
  });
  m.def("gl_product", [](const std::string& a, const std::string& b) {
    return terms(gl_product(parse_forest(a), parse_forest(b)));
  });
  m.def("shuffle", [](const std::string& a, const std::string& b) {
    return terms(shuffle(parse_forest(a), parse_forest(b)));
  });
  m.def("graft", [](const std::string& a, const std::string& b) {
    return terms(graft(canonicalize(parse_tree(a)), canonicalize(parse_tree(b))));
  });

  m.def("delta_ck", [](const std::string& s) { return terms(delta_CK(nonplanar(s))); });
  m.def("delta_h", [](const std::string& s) { return terms(delta_H(nonplanar(s))); });
  m.def("delta_n", [](const std::string& s) { return terms(delta_N(parse_forest(s))); });
  m.def("delta_shuffle", [](const std::string& s) { return terms(delta_shuffle(parse_forest(s))); });
  m.def(
      "delta_w", [](const std::string& s, const std::string& rule) { return terms(delta_W(parse_forest(s), rule_of(rule))); },
      py::arg("forest"), py::arg("rule") = "lie");
  m.def(
      "rho", [](const std::string& s, const std::string& rule) { return terms(rho_from_delta_W(parse_forest(s), rule_of(rule))); },
      py::arg("forest"), py::arg("rule") = "lie");

  m.def("laws", [] {
    std::vector<std::pair<std::string, std::size_t>> out;
    for (const auto& l : law_registry()) out.emplace_back(l.name, l.default_order);
    return out;
  });
  m.def(
      "run_law",
      [](const std::string& name, std::optional<std::size_t> order) {
        const LawResult r = run_law(name, order);
        return std::make_tuple(r.ok, r.cases, r.counterexample);
      },
      py::arg("name"), py::arg("order") = py::none());
  m.def("run_cli", &run, py::arg("args"));
}
