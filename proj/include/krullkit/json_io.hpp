#pragma once

#include <json.hpp>

#include "krullkit/cardinal_engine.hpp"
#include "krullkit/chain_lab.hpp"
#include "krullkit/lex_groups.hpp"
#include "krullkit/spectra_lpa.hpp"

namespace krullkit::io {

using json = nlohmann::ordered_json;

/// {"ground": [...], "links": [[...], ...]}. Throws MalformedInput.
chains::SubsetChain chain_from_json(const json& j);
json to_json(const chains::SubsetChain& c);
json corder_json(const chains::SubsetChain& c);
json to_json(const chains::SeparatedSet& s);
json to_json(const chains::DenseToChain& d);
json to_json(const chains::DenseConstruction& d);
json to_json(const chains::DedFinite& d);

json to_json(const lex::ConcatenationReport& r);
json to_json(const lex::ValuationSpectrum& s);

/// {"orig": [...], "cuts": [{"key": ...}], "relation": [[a, b], ...]} with
/// strict pairs only.
json to_json(const lpa::ATPoset& a);
json to_json(const lpa::SpectrumOrder& s);
json to_json(const lpa::DenseInjection& d);
json to_json(const lpa::BerryFinite& b);

json to_json(const card::Verdict& v);
json to_json(const card::Predicates& p);
json to_json(const card::DedBounds& d);
json to_json(const card::RingDescriptor& d);
json to_json(const card::PolyWitnessChain& w);

/// {"entries": {"aleph(0)": "aleph(2)"}, "gch_from": "aleph(1)"}.
card::AxiomMode axiom_mode_from_json(const json& j);

}  // namespace krullkit::io
