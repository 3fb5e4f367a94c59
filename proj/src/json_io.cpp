#include "krullkit/json_io.hpp"

#include "krullkit/error.hpp"

namespace krullkit::io {

chains::SubsetChain chain_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("links") || !j["ground"].is_array() ||
      !j["links"].is_array()) {
    fail(ErrorCode::MalformedInput, "chain JSON needs arrays \"ground\" and \"links\"");
  }
  std::vector<order::Label> ground;
  for (const auto& g : j["ground"]) {
    if (!g.is_string()) fail(ErrorCode::MalformedInput, "ground labels must be strings");
    ground.push_back(g.get<std::string>());
  }
  std::vector<std::vector<order::Label>> links;
  for (const auto& link : j["links"]) {
    if (!link.is_array()) fail(ErrorCode::MalformedInput, "each link must be an array");
    auto& out = links.emplace_back();
    for (const auto& x : link) {
      if (!x.is_string()) fail(ErrorCode::MalformedInput, "link members must be strings");
      out.push_back(x.get<std::string>());
    }
  }
  return chains::SubsetChain(std::move(ground), links);
}

json to_json(const chains::SubsetChain& c) {
  json links = json::array();
  for (auto m : c.links()) links.push_back(c.labels(m));
  return json{{"ground", c.ground()}, {"links", links}};
}

json corder_json(const chains::SubsetChain& c) {
  auto order = chains::c_order(c);
  json rel = json::array();
  for (auto [x, y] : order.pairs()) rel.push_back({c.ground()[x], c.ground()[y]});
  return json{{"ground", c.ground()},
              {"relation", rel},
              {"irreflexive", order.irreflexive()},
              {"transitive", order.transitive()}};
}

json to_json(const chains::SeparatedSet& s) {
  json restricted = json::array();
  for (auto m : s.restricted.links()) restricted.push_back(s.restricted.labels(m));
  return json{{"members", s.members},   {"restricted", restricted}, {"separated", s.separated},
              {"maximal", s.maximal},   {"injective", s.injective}, {"total", s.total}};
}

json to_json(const chains::DenseToChain& d) {
  json out = to_json(d.chain);
  out["collapsed"] = d.collapsed;
  return out;
}

json to_json(const chains::DenseConstruction& d) {
  json cuts = json::array(), dense = json::array(), witnesses = json::array();
  for (const auto& c : d.cuts) {
    cuts.push_back(c.to_string());
    if (c.kind == chains::CutKind::Seg) dense.push_back(c.to_string());
  }
  for (std::size_t i = 0; i < d.witnesses.size(); ++i) {
    witnesses.push_back(json{{"lower", d.cuts[i].to_string()},
                             {"upper", d.cuts[i + 1].to_string()},
                             {"between", d.witnesses[i].to_string()}});
  }
  return json{{"separated", d.prepared->separated.members},
              {"columns", d.column_count()},
              {"cuts", cuts},
              {"dense", dense},
              {"witnesses", witnesses}};
}

json to_json(const chains::DedFinite& d) {
  return json{{"n", d.n},
              {"links", d.links},
              {"containments", d.containments()},
              {"mode", d.exhaustive ? "exhaustive" : "witness"},
              {"witness", to_json(d.witness)["links"]}};
}

json to_json(const lex::ConcatenationReport& r) {
  json witness = json::object();
  if (r.witness)
    for (const auto& [from, to] : r.witness->mapping) witness[from] = to;
  return json{{"lhs", r.lhs.type_string()},
              {"rhs", r.rhs.type_string()},
              {"witness", witness},
              {"bijective", r.bijective},
              {"preserving", r.preserving},
              {"reflecting", r.reflecting},
              {"projection_monotone", r.projection_monotone},
              {"holds", r.holds()}};
}

json to_json(const lex::ValuationSpectrum& s) {
  json out = json::array();
  for (std::size_t i = 0; i < s.primes.size(); ++i) {
    out.push_back(json{{"prime", s.primes.at(i)}, {"subgroup", s.subgroups[i].to_string()}});
  }
  return out;
}

json to_json(const lpa::ATPoset& a) {
  json orig = json::array(), cuts = json::array(), rel = json::array();
  for (const auto& e : a.elements()) {
    if (e.original) orig.push_back(e.label);
    else cuts.push_back(json{{"key", e.label}});
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j && a.leq(i, j)) rel.push_back({a.elements()[i].name(), a.elements()[j].name()});
  json out{{"orig", orig}, {"cuts", cuts}, {"relation", rel}, {"fragment", a.fragment()},
           {"cardinality", a.cardinality()}};
  if (a.fragment() == "exact") {
    out["scanned"] = a.scanned;
    out["eligible"] = a.eligible;
  }
  return out;
}

json to_json(const lpa::SpectrumOrder& s) {
  return json{{"primes", s.primes}, {"linear", s.linear}, {"completion", to_json(s.at)}};
}

json to_json(const lpa::DenseInjection& d) {
  json mapping = json::object();
  for (const auto& [from, to] : d.mapping) mapping[from] = to;
  return json{{"mapping", mapping},
              {"injective", d.injective},
              {"preserving", d.preserving},
              {"reflecting", d.reflecting}};
}

json to_json(const lpa::BerryFinite& b) {
  return json{{"elements", b.poset.size()},
              {"cuts", b.at.cut_count()},
              {"isomorphic", b.isomorphic},
              {"longest_chain", b.longest_chain},
              {"attained", b.attained}};
}

json to_json(const card::Verdict& v) {
  json out{{"verdict", card::to_string(v.answer)}, {"rule", v.rule}, {"anchor", v.anchor}, {"notes", v.notes}};
  if (v.witness) out["witness"] = *v.witness;
  return out;
}

json to_json(const card::Predicates& p) {
  using card::to_string;
  return json{{"regular", to_string(p.regular)},     {"singular", to_string(p.singular)},
              {"successor", to_string(p.successor)}, {"limit", to_string(p.limit)},
              {"psl", to_string(p.psl)},             {"strong_limit", to_string(p.strong_limit)}};
}

json to_json(const card::DedBounds& d) {
  return json{{"lower", d.lower.to_string()},
              {"upper", d.upper.to_string()},
              {"upper_value", d.upper_value.to_string()},
              {"exact", d.exact ? json(d.exact->to_string()) : json(nullptr)},
              {"notes", d.notes}};
}

json to_json(const card::RingDescriptor& d) {
  auto q = [](const card::Quantity& x) {
    return json{{"value", x.value}, {"resolved", x.resolved}, {"justification", x.justification}};
  };
  const char* kind = "valuation";
  switch (d.kind) {
    case card::RingKind::ValuationFromGroup: kind = "valuation"; break;
    case card::RingKind::PolyRing: kind = "poly"; break;
    case card::RingKind::LpaFromChain: kind = "lpa"; break;
    case card::RingKind::BerryFamily: kind = "berry"; break;
  }
  return json{{"descriptor", d.text},
              {"kind", kind},
              {"cardinality", q(d.cardinality)},
              {"cdim", q(d.cdim)},
              {"scdim", q(d.scdim)}};
}

json to_json(const card::PolyWitnessChain& w) {
  return json{{"primes", w.primes}, {"ideals", w.ideals}, {"witnesses", w.witnesses}};
}

card::AxiomMode axiom_mode_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorCode::MalformedInput, "axiom table must be a JSON object");
  std::map<card::Ordinal, card::Ordinal> entries;
  auto index = [](const json& v) {
    if (!v.is_string()) fail(ErrorCode::MalformedInput, "table cardinals must be strings");
    auto c = card::Cardinal::parse(v.get<std::string>());
    if (c.is_finite()) fail(ErrorCode::InconsistentTable, "table entries must be infinite cardinals");
    return c.index();
  };
  if (j.contains("entries")) {
    if (!j["entries"].is_object()) fail(ErrorCode::MalformedInput, "\"entries\" must be an object");
    for (const auto& [k, v] : j["entries"].items()) entries[index(json(k))] = index(v);
  }
  std::optional<card::Ordinal> from;
  if (j.contains("gch_from") && !j["gch_from"].is_null()) from = index(j["gch_from"]);
  return card::AxiomMode::table(std::move(entries), from);
}

}  // namespace krullkit::io
