#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kmchev/io.hpp"
#include "kmchev/selftest.hpp"

namespace py = pybind11;
using namespace kmchev;

namespace {

WeylGroup make_group(const std::string& cartan, const std::optional<std::vector<std::vector<int>>>& matrix) {
  if (matrix) return WeylGroup(RootDatum(CartanMatrix(*matrix)));
  return WeylGroup(RootDatum(CartanMatrix::preset(cartan)));
}

py::object loads(const std::string& s) { return py::module_::import("json").attr("loads")(s); }

NodeSet node_set(const RootDatum& rd, const std::vector<int>& labels) {
  std::uint64_t bits = 0;
  for (int l : labels) bits |= 1ULL << rd.index_of(l);
  return NodeSet::from_bits(bits);
}

}  // namespace

PYBIND11_MODULE(_kmchev, m) {
  m.doc() = "Chevalley coefficients in equivariant K-theory of Kac-Moody flag manifolds";

  m.def(
      "chevalley",
      [](const std::string& cartan, const std::string& weight, std::optional<std::string> w,
         std::optional<std::string> z, std::optional<int> max_length, const std::string& sign,
         const std::string& model, std::optional<std::vector<std::vector<int>>> matrix) {
        auto g = make_group(cartan, matrix);
        Weight lambda = parse_weight(g.roots(), weight);
        ChevalleyResult r;
        {
          py::gil_scoped_release nogil;
          if (z) {
            if (!max_length) throw std::invalid_argument("z needs max_length");
            r = compute_row_fixed_z(g, cartan, lambda, parse_sign(sign), parse_model(model), g.parse(*z), *max_length);
          } else {
            r = compute_row(g, cartan, lambda, parse_sign(sign), parse_model(model), g.parse(w.value_or("e")));
          }
        }
        return loads(to_json(g, r));
      },
      py::arg("cartan"), py::arg("weight"), py::arg("w") = py::none(), py::arg("z") = py::none(),
      py::arg("max_length") = py::none(), py::arg("sign") = "dominant", py::arg("model") = "nilhecke",
      py::arg("matrix") = py::none(),
      "Chevalley row as a JSON-shaped dict. Give w for a fixed-w row or z with max_length for a fixed-z row.");

  m.def(
      "crystal",
      [](const std::string& cartan, const std::string& weight, const std::string& w, const std::string& model) {
        auto g = make_group(cartan, std::nullopt);
        Weight lambda = parse_weight(g.roots(), weight);
        LSModel ls(g, lambda);
        WeylElt x = g.parse(w);
        if (model == "alcove") {
          AlcoveModel am(g, lambda);
          return loads(alcove_crystal_json(am, ls, am.demazure(x), false, cartan));
        }
        if (model != "ls") throw std::invalid_argument("model must be ls or alcove");
        return loads(crystal_json(ls, ls.demazure_crystal(x), cartan));
      },
      py::arg("cartan"), py::arg("weight"), py::arg("w"), py::arg("model") = "ls", "Demazure crystal as a dict.");

  m.def(
      "demazure_character",
      [](const std::string& cartan, const std::string& weight, const std::string& w) {
        auto g = make_group(cartan, std::nullopt);
        LSModel ls(g, parse_weight(g.roots(), weight));
        std::map<std::string, Int> out;
        LaurentPoly ch = path_sum(ls, ls.demazure_crystal(g.parse(w)));
        for (const auto& [mu, c] : ch.terms())
          out[format_weight(g.roots(), mu)] = c;
        return out;
      },
      py::arg("cartan"), py::arg("weight"), py::arg("w"), "Weight multiplicities of a Demazure crystal.");

  m.def(
      "lift_up",
      [](const std::string& cartan, const std::string& v, const std::string& tau, const std::vector<int>& J) {
        auto g = make_group(cartan, std::nullopt);
        return g.format(up(g, g.parse(v), g.coset(g.parse(tau), node_set(g.roots(), J))));
      },
      py::arg("cartan"), py::arg("v"), py::arg("tau"), py::arg("J"), "Bruhat-minimal element above v in tau W_J.");
  m.def(
      "lift_down",
      [](const std::string& cartan, const std::string& w, const std::string& tau, const std::vector<int>& J) {
        auto g = make_group(cartan, std::nullopt);
        return g.format(down(g, g.parse(w), g.coset(g.parse(tau), node_set(g.roots(), J))));
      },
      py::arg("cartan"), py::arg("w"), py::arg("tau"), py::arg("J"), "Bruhat-maximal element below w in tau W_J.");

  m.def(
      "tree_dot",
      [](const std::string& cartan, const std::string& weight, const std::string& w, const std::string& sign) {
        auto g = make_group(cartan, std::nullopt);
        AlcoveModel am(g, parse_weight(g.roots(), weight));
        WeylElt x = g.parse(w);
        return tree_dot(am, parse_sign(sign) == Sign::Dominant ? am.tree_dominant(x) : am.tree_antidominant(x));
      },
      py::arg("cartan"), py::arg("weight"), py::arg("w"), py::arg("sign") = "dominant");

  m.def("selftest_scenarios", &selftest_scenarios);
  m.def(
      "selftest",
      [](std::optional<std::vector<std::string>> scenarios, bool inject_fault) {
        SelftestOptions opt;
        if (scenarios) {
          std::string joined;
          for (const auto& s : *scenarios) joined += (joined.empty() ? "" : ",") + s;
          opt.scenarios = joined;
        }
        opt.fault_flip_lex = inject_fault;
        SelftestReport rep;
        {
          py::gil_scoped_release nogil;
          rep = run_selftest(opt);
        }
        return loads(rep.to_json());
      },
      py::arg("scenarios") = py::none(), py::arg("inject_fault") = false);

  py::register_exception<LayerCapExceeded>(m, "LayerCapExceeded", PyExc_RuntimeError);
}
