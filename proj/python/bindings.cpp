#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "krullkit/cardinal_engine.hpp"
#include "krullkit/chain_lab.hpp"
#include "krullkit/error.hpp"
#include "krullkit/json_io.hpp"
#include "krullkit/lex_groups.hpp"
#include "krullkit/spectra_lpa.hpp"

namespace py = pybind11;
using namespace krullkit;
using io::json;

namespace {

// Everything crosses the boundary as JSON so Python gets plain dicts and lists
// with the same shape the CLI prints.
py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json from_py(const py::object& o) {
  return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

std::vector<Rational> rationals(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  for (const auto& t : texts) out.push_back(Rational::parse(t));
  return out;
}

bool finite_poset(const std::string& text) {
  return text.rfind("chain:", 0) == 0 || text.rfind("antichain:", 0) == 0 || text.rfind("chains:", 0) == 0;
}

card::AxiomMode mode_of(const std::string& axioms, const py::object& table, const std::string& preset) {
  if (axioms == "gch") {
    if (!table.is_none() || !preset.empty()) fail(ErrorCode::Parse, "gch cannot be combined with a table");
    return card::AxiomMode::gch();
  }
  if (axioms != "table") fail(ErrorCode::Parse, "axioms must be gch or table");
  if (preset == "cohen") return card::AxiomMode::cohen();
  if (!preset.empty()) fail(ErrorCode::Parse, "unknown preset " + preset);
  if (!table.is_none()) return io::axiom_mode_from_json(from_py(table));
  return card::AxiomMode::empty_table();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "krullkit core bindings";

  static py::exception<Error> error(m, "KrullkitError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object args = py::make_tuple(to_string(e.code()), e.what());
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  // groups
  m.def("group_rank", [](const std::string& g) { return lex::rank(lex::parse_group(g)).elements(); },
        py::arg("group"));
  m.def("valuation_spectrum", [](const std::string& g) {
    return to_py(io::to_json(lex::valuation_spectrum(lex::parse_group(g))));
  }, py::arg("group"));
  m.def("check_concatenation", [](const std::vector<std::string>& names, std::uint64_t seed, std::size_t trials) {
    std::vector<lex::LexGroup> groups;
    for (const auto& n : names) groups.push_back(lex::parse_group(n));
    return to_py(io::to_json(lex::check_concatenation_theorem(groups, seed, trials)));
  }, py::arg("groups"), py::arg("seed") = 1, py::arg("trials") = 2000);
  m.def("tree_group", [](std::size_t n) {
    auto t = lex::tree_group(n);
    py::dict leaves;
    for (const auto& [word, h] : t.leaves) leaves[py::str(word)] = h.to_string();
    py::dict out;
    out["depth"] = t.depth;
    out["leaves"] = leaves;
    out["distinct_segments"] = t.distinct_segments();
    out["monotone"] = t.monotone();
    return out;
  }, py::arg("n"));

  // chains
  m.def("c_order", [](const py::object& chain) {
    return to_py(io::corder_json(io::chain_from_json(from_py(chain))));
  }, py::arg("chain"));
  m.def("max_separated", [](const py::object& chain, const std::vector<std::string>& hint) {
    return to_py(io::to_json(chains::max_separated(io::chain_from_json(from_py(chain)), hint)));
  }, py::arg("chain"), py::arg("hint") = std::vector<std::string>{});
  m.def("chain_to_dense", [](const py::object& chain, const std::vector<std::string>& probes) {
    auto c = io::chain_from_json(from_py(chain));
    auto qs = probes.empty() ? chains::default_probes() : rationals(probes);
    return to_py(io::to_json(chains::chain_to_dense(c, qs)));
  }, py::arg("chain"), py::arg("probes") = std::vector<std::string>{});
  m.def("dense_to_chain", [](const std::vector<std::string>& order, const std::vector<std::string>& dense) {
    return to_py(io::to_json(chains::dense_to_chain(order::FiniteLinOrder(order), dense)));
  }, py::arg("order"), py::arg("dense"));
  m.def("ded_finite", [](std::size_t n, bool witness_only) {
    return to_py(io::to_json(chains::ded_finite(n, witness_only)));
  }, py::arg("n"), py::arg("witness_only") = false);

  // graphs and completions
  m.def("build_ep", [](const std::string& poset, const std::string& mult) {
    auto g = lpa::build_ep(lpa::parse_poset(poset), lpa::Multiplicity::parse(mult));
    py::list vertices, arcs;
    for (std::size_t v = 0; v < g.vertices().size(); ++v) vertices.append(g.vertex_name(v));
    for (const auto& a : g.arcs()) {
      py::dict arc;
      arc["source"] = g.vertex_name(a.source);
      arc["range"] = g.vertex_name(a.range);
      arc["mult"] = a.mult.to_string();
      arcs.append(arc);
    }
    py::dict out;
    out["vertices"] = vertices;
    out["arcs"] = arcs;
    out["regular"] = lpa::regular_vertices(g);
    out["paths"] = lpa::count_paths(g).to_string();
    out["dot"] = lpa::export_dot(g);
    return out;
  }, py::arg("poset"), py::arg("mult") = "omega");
  m.def("completion", [](const std::string& poset, const std::vector<std::string>& probes) {
    if (finite_poset(poset)) return to_py(io::to_json(lpa::at_finite(lpa::parse_poset(poset))));
    auto c = order::SymbolicChain::parse(poset);
    auto qs = probes.empty() ? lpa::default_fd_probes(c) : rationals(probes);
    return to_py(io::to_json(lpa::at_fd(c, qs)));
  }, py::arg("poset"), py::arg("probes") = std::vector<std::string>{});
  m.def("spectrum_order", [](const std::string& poset) {
    auto s = finite_poset(poset) ? lpa::spectrum_order(lpa::parse_poset(poset))
                                 : lpa::spectrum_order(order::SymbolicChain::parse(poset));
    return to_py(io::to_json(s));
  }, py::arg("poset"));
  m.def("berry_family", [](const std::vector<std::size_t>& lengths) {
    return to_py(io::to_json(lpa::berry_family(lengths)));
  }, py::arg("lengths"));

  // cardinals
  m.def("exists_ring", [](const std::string& k, const std::string& l, const std::string& kind,
                          const std::string& axioms, const py::object& table, const std::string& preset) {
    if (kind != "any" && kind != "valuation") fail(ErrorCode::Parse, "kind must be any or valuation");
    auto filter = kind == "valuation" ? card::RingKindFilter::Valuation : card::RingKindFilter::Any;
    return to_py(io::to_json(card::exists_ring(card::Cardinal::parse(k), card::CardExpr::parse(l),
                                               mode_of(axioms, table, preset), filter)));
  }, py::arg("kappa"), py::arg("lam"), py::arg("kind") = "any", py::arg("axioms") = "table",
     py::arg("table") = py::none(), py::arg("preset") = "");
  m.def("catalog", [](const std::string& desc, const std::string& axioms, const py::object& table,
                      const std::string& preset) {
    return to_py(io::to_json(card::catalog(desc, mode_of(axioms, table, preset))));
  }, py::arg("descriptor"), py::arg("axioms") = "table", py::arg("table") = py::none(), py::arg("preset") = "");
  m.def("ded_bounds", [](const std::string& k, const std::string& axioms, const py::object& table,
                         const std::string& preset) {
    return to_py(io::to_json(card::ded_bounds(card::Cardinal::parse(k), mode_of(axioms, table, preset))));
  }, py::arg("kappa"), py::arg("axioms") = "table", py::arg("table") = py::none(), py::arg("preset") = "");
  m.def("predicates", [](const std::string& k, const std::string& axioms, const py::object& table,
                         const std::string& preset) {
    return to_py(io::to_json(card::predicates(card::Cardinal::parse(k), mode_of(axioms, table, preset))));
  }, py::arg("kappa"), py::arg("axioms") = "table", py::arg("table") = py::none(), py::arg("preset") = "");
  m.def("cofinality", [](const std::string& k) { return card::cofinality(card::Cardinal::parse(k)).to_string(); },
        py::arg("kappa"));
  m.def("exp2", [](const std::string& k, const std::string& axioms, const py::object& table,
                   const std::string& preset) {
    return card::card_exp2(card::Cardinal::parse(k), mode_of(axioms, table, preset)).to_string();
  }, py::arg("kappa"), py::arg("axioms") = "table", py::arg("table") = py::none(), py::arg("preset") = "");

  // same entry point as the executable, for scripting
  m.def("run_cli", [](const std::vector<std::string>& args, const std::string& stdin_text) {
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    int code = cli::run(args, out, err, in);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), py::arg("stdin") = "");
}
