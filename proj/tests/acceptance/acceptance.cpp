// Acceptance run: one PASS/FAIL line per criterion, each under its time limit.
// Usage: krullkit_acceptance [--golden-dir DIR] [criterion numbers...]

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "../golden/golden.hpp"
#include "krullkit/cardinal_engine.hpp"
#include "krullkit/chain_lab.hpp"
#include "krullkit/lex_groups.hpp"
#include "krullkit/random.hpp"
#include "krullkit/spectra_lpa.hpp"
#include "oracles.hpp"

using namespace krullkit;

namespace {

// Collects failed checks; the first few are echoed under the verdict line.
struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<void(Tally&)> body;
};

order::FinitePoset to_poset(const oracle::Poset& o) {
  std::vector<order::Label> labels;
  for (std::size_t i = 0; i < o.n; ++i) labels.push_back(std::to_string(i));
  return order::FinitePoset::from_matrix(labels, o.leq);
}

std::vector<order::Label> letters(std::size_t n) {
  std::vector<order::Label> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

// ---------------------------------------------------------------------------

void rank_concatenation(Tally& t) {
  std::size_t sequences = 0;
  std::vector<std::vector<std::size_t>> seqs;
  for (std::size_t len = 1; len <= 3; ++len) {
    std::vector<std::size_t> cur(len, 1);
    while (true) {
      seqs.push_back(cur);
      std::size_t i = 0;
      while (i < len && cur[i] == 3) cur[i++] = 1;
      if (i == len) break;
      ++cur[i];
    }
  }
  for (const auto& ranks : seqs) {
    std::vector<lex::LexGroup> gs;
    std::size_t total = 0;
    std::string name;
    for (auto r : ranks) {
      gs.push_back(lex::LexGroup::zlex(r));
      total += r;
      name += "zlex(" + std::to_string(r) + ") ";
    }
    auto rep = lex::check_concatenation_theorem(gs, default_seed());
    ++sequences;
    t.expect(rep.holds(), "no witness for " + name);
    t.expect(rep.lhs.size() == total && rep.rhs.size() == total, "rank length off for " + name);
  }
  t.summary = std::to_string(sequences) + " sequences, witness found for each";
}

void tree_construction(Tally& t) {
  std::size_t leaves = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto tg = lex::tree_group(n);
    for (const auto& [leaf, h] : tg.leaves) {
      auto s = lex::is_isolated_sample(h, 10000, lex::kDefaultBound, default_seed());
      ++leaves;
      t.expect(s.passed && s.trials == 10000, "leaf " + leaf + " failed isolation sampling");
    }
    t.expect(tg.distinct_segments() == (std::size_t{1} << (n - 1)), "distinct count at depth " + std::to_string(n));
    t.expect(tg.monotone(), "leaf map not monotone at depth " + std::to_string(n));
  }
  t.summary = std::to_string(leaves) + " leaves x 10^4 trials, 0 counterexamples; distinct 1,2,4,8";
}

void valuation_spectrum(Tally& t) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto g = lex::LexGroup::zlex(n);
    auto s = lex::valuation_spectrum(g);
    t.expect(s.primes.size() == n + 1, "prime count for zlex(" + std::to_string(n) + ")");
    auto d = card::catalog("valuation(zlex(" + std::to_string(n) + "),aleph(0))", card::AxiomMode::empty_table());
    t.expect(d.cdim.value == std::to_string(n), "catalog dimension for zlex(" + std::to_string(n) + ")");
  }
  // Z: the zero ideal and the maximal ideal, matched with G and {0}
  auto z = lex::valuation_spectrum(lex::LexGroup::zlex(1));
  t.expect(z.krull_dimension() == 1, "dimension of the valuation ring of Z");
  t.expect(z.subgroups.front().to_string() == "{0}" && z.subgroups.back().is_trivial(),
           "Z picture: P0 should match G and P1 the trivial subgroup");
  t.summary = "zlex(1..5) give 2..6 primes; catalog dimension n; Z gives 0 < m";
}

void c_order_lemma(Tally& t) {
  std::size_t exhaustive = 0;
  auto check = [&](const chains::SubsetChain& c, const std::vector<std::uint64_t>& links) {
    auto o = chains::c_order(c);
    t.expect(o.irreflexive() && o.transitive(), "c-order axioms");
    for (std::size_t x = 0; x < c.ground().size(); ++x)
      for (std::size_t y = 0; y < c.ground().size(); ++y)
        if (o.less(x, y) != oracle::c_less(links, x, y)) t.expect(false, "c-order disagrees with definition");
    auto s = chains::max_separated(c);
    std::uint64_t members = 0;
    for (const auto& m : s.members) members |= std::uint64_t{1} << c.index_of(m);
    std::set<std::uint64_t> images;
    for (auto l : links) images.insert(l & members);
    t.expect(images.size() == links.size() && s.injective, "restriction not injective");
    t.expect(oracle::separated(links, members) && s.separated, "not separated");
    t.expect(s.total, "not total on S'");
    bool maximal = true;
    for (std::size_t x = 0; x < c.ground().size(); ++x)
      if (!(members >> x & 1) && oracle::separated(links, members | (std::uint64_t{1} << x))) maximal = false;
    t.expect(maximal && s.maximal, "not maximal");
  };
  for (std::size_t n = 0; n <= 4; ++n) {
    auto ground = letters(n);
    oracle::for_each_chain(n, [&](const std::vector<std::uint64_t>& links) {
      ++exhaustive;
      check(chains::SubsetChain::from_masks(ground, links), links);
    });
  }
  std::mt19937_64 rng(default_seed());
  auto ground = letters(8);
  for (int i = 0; i < 1000; ++i) {
    std::vector<std::size_t> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::uint64_t> links;
    std::uint64_t cur = 0;
    for (std::size_t k = 0; k <= 8; ++k) {
      if (rng() % 2) links.push_back(cur);
      if (k < 8) cur |= std::uint64_t{1} << perm[k];
    }
    if (links.empty()) links.push_back(cur);
    check(chains::SubsetChain::from_masks(ground, links), links);
  }
  t.summary = std::to_string(exhaustive) + " chains over <= 4 elements + 1000 random over 8";
}

// A point of b minus a, read off the comparison case by hand.
std::optional<std::pair<order::Label, Rational>> strict_point(const chains::Cut& a, const chains::Cut& b) {
  const auto& p = *a.prepared;
  const auto& members = p.separated.members;
  using chains::CutKind;
  if (a.kind == CutKind::Seg) return std::make_pair(members[a.member], a.q);
  if (b.kind == CutKind::Seg) return std::make_pair(members[b.member], b.q - Rational(1));
  auto diff = p.chain.links()[b.link] & ~p.chain.links()[a.link];
  for (std::size_t i = 0; i < p.chain.ground().size(); ++i)
    if (diff >> i & 1) return std::make_pair(p.chain.ground()[i], Rational(0));
  return std::nullopt;
}

void cut_construction(Tally& t) {
  std::mt19937_64 rng(default_seed());
  std::vector<chains::DenseConstruction> collections;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto ground = letters(n);
    oracle::for_each_chain(n, [&](const std::vector<std::uint64_t>& links) {
      if (n < 4 || rng() % 8 == 0) collections.push_back(chains::chain_to_dense(chains::SubsetChain::from_masks(ground, links)));
    });
  }
  std::size_t max_cuts = 0, strict_pairs = 0;
  for (const auto& d : collections) {
    const auto& cuts = d.cuts;
    max_cuts = std::max(max_cuts, cuts.size());
    for (const auto& x : cuts)
      for (const auto& y : cuts) {
        auto rel = chains::cut_cmp(x, y);
        if (rel != chains::CutRelation::Subset) continue;
        ++strict_pairs;
        auto w = chains::betweenness_witness(x, y);
        t.expect(w && w->kind == chains::CutKind::Seg && chains::cut_cmp(x, *w) == chains::CutRelation::Subset &&
                     chains::cut_cmp(*w, y) == chains::CutRelation::Subset,
                 "missing Seg witness between " + x.to_string() + " and " + y.to_string());
        for (const auto& z : cuts)
          if (chains::cut_cmp(y, z) == chains::CutRelation::Subset)
            t.expect(chains::cut_cmp(x, z) == chains::CutRelation::Subset, "comparator not transitive");
      }
  }
  t.expect(max_cuts <= 40, "collection larger than 40 cuts");

  // 10^4 sampled (cut, cut, point) triples against the membership oracle
  std::uniform_int_distribution<std::int64_t> num(-16, 16), den(1, 4);
  std::size_t disagreements = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto& d = collections[rng() % collections.size()];
    const auto& x = d.cuts[rng() % d.cuts.size()];
    const auto& y = d.cuts[rng() % d.cuts.size()];
    const auto& members = d.prepared->separated.members;
    const auto& s = members[rng() % members.size()];
    Rational q(num(rng), den(rng));
    auto rel = chains::cut_cmp(x, y);
    bool in_x = chains::membership_oracle(x, s, q), in_y = chains::membership_oracle(y, s, q);
    bool ok = true;
    if (rel == chains::CutRelation::Subset) ok = !in_x || in_y;
    if (rel == chains::CutRelation::Superset) ok = !in_y || in_x;
    if (rel == chains::CutRelation::Equal) ok = in_x == in_y;
    if (rel == chains::CutRelation::Subset) {
      auto pt = strict_point(x, y);
      ok = ok && pt && chains::membership_oracle(y, pt->first, pt->second) &&
           !chains::membership_oracle(x, pt->first, pt->second);
    }
    if (!ok) ++disagreements;
  }
  t.expect(disagreements == 0, std::to_string(disagreements) + " disagreements with the membership oracle");
  t.summary = std::to_string(collections.size()) + " collections (<= " + std::to_string(max_cuts) + " cuts), " +
              std::to_string(strict_pairs) + " strict pairs witnessed; 10^4 triples, 0 disagreements";
}

void finite_ded(Tally& t) {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto d = chains::ded_finite(n);
    t.expect(d.exhaustive && d.links == n + 1 && d.links == oracle::longest_subset_chain(n),
             "exhaustive ded at n = " + std::to_string(n));
  }
  for (std::size_t n = 0; n <= 6; ++n) {
    auto d = chains::ded_finite(n, true);
    bool nested = d.witness.size() == n + 1;
    for (std::size_t i = 0; nested && i + 1 < d.witness.size(); ++i)
      nested = (d.witness.links()[i] & ~d.witness.links()[i + 1]) == 0;
    t.expect(d.links == n + 1 && nested, "witness ded at n = " + std::to_string(n));
  }
  t.summary = "n+1 for n = 0..4 by search, witnesses for n <= 6";
}

void completion_degeneracy(Tally& t) {
  std::size_t posets = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& o : oracle::natural_posets(n)) {
      ++posets;
      auto p = to_poset(o);
      auto a = lpa::at_finite(p);
      t.expect(a.cut_count() == 0 && order::order_iso(a.as_poset(), p).has_value(), "completion differs from P");
      if (p.is_chain()) t.expect(a.is_total(), "completion of a chain is not total");
    }
  for (std::size_t n = 1; n <= 8; ++n) t.expect(lpa::at_finite(order::FinitePoset::chain(n)).is_total(), "chain:n total");
  for (const char* c : {"rats", "ints", "omega", "omega_op"}) {
    auto a = lpa::at_fd(order::SymbolicChain::parse(c));
    t.expect(a.is_total() && a.is_partial_order(), std::string("fragment over ") + c + " not a chain");
  }
  // preorder axioms and well-definedness of the quotient, exhaustive up to 4
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& o : oracle::natural_posets(n)) {
      auto p = to_poset(o);
      std::uint32_t full = (1u << n) - 1;
      std::vector<std::vector<bool>> le(full + 1, std::vector<bool>(full + 1));
      for (std::uint32_t a = 1; a <= full; ++a)
        for (std::uint32_t b = 1; b <= full; ++b) {
          le[a][b] = lpa::subset_preceq_mask(a, b, p);
          if (le[a][b] != oracle::preceq(o, a, b)) t.expect(false, "preceq disagrees with definition");
        }
      for (std::uint32_t a = 1; a <= full; ++a) {
        if (!le[a][a]) t.expect(false, "not reflexive");
        for (std::uint32_t b = 1; b <= full; ++b)
          for (std::uint32_t c = 1; c <= full; ++c) {
            if (le[a][b] && le[b][c] && !le[a][c]) t.expect(false, "not transitive");
            // a ~ b: swapping a for b never changes a comparison with c
            if (le[a][b] && le[b][a] && (le[a][c] != le[b][c] || le[c][a] != le[c][b]))
              t.expect(false, "quotient order not well defined");
          }
      }
      t.expect(true, "preorder");
    }
  t.summary = std::to_string(posets) + " posets with <= 5 elements give A(P) = P; chains stay total; axioms hold up to 4";
}

// Rules (1)-(4) on Q with originals q, successor cuts (q, inf) and the
// bottom class of Q itself, worked out by hand.
struct QElem {
  enum Kind { Orig, Succ, Bottom } kind;
  Rational q;
};

bool rules_leq(const QElem& a, const QElem& b) {
  using K = QElem::Kind;
  if (a.kind == K::Orig && b.kind == K::Orig) return a.q <= b.q;
  if (a.kind == K::Orig) return b.kind == K::Succ && a.q <= b.q;  // a below all of (q, inf)
  if (b.kind == K::Orig) return a.kind == K::Bottom || a.q < b.q;  // something of S at or below b
  if (a.kind == K::Bottom) return true;
  if (b.kind == K::Bottom) return false;
  return a.q <= b.q;
}

QElem classify(const lpa::ATElement& e) {
  if (e.original) return {QElem::Orig, Rational::parse(e.label)};
  if (e.label == "-inf") return {QElem::Bottom, Rational(0)};
  return {QElem::Succ, Rational::parse(e.label)};
}

void rational_fragment(Tally& t) {
  auto q = order::SymbolicChain::rats();
  auto probes = lpa::default_fd_probes(q);
  auto a = lpa::at_fd(q, probes);
  std::size_t bottoms = 0;
  for (const auto& p : probes) {
    std::size_t succ = 0;
    for (const auto& e : a.elements())
      if (!e.original && e.label == p.to_string()) ++succ;
    t.expect(succ == 1, "successor cut count at " + p.to_string());
  }
  for (const auto& e : a.elements())
    if (!e.original && e.label == "-inf") ++bottoms;
  t.expect(bottoms == 1 && a.cut_count() == probes.size() + 1, "one bottom class");
  auto inj = lpa::dense_cor_injection(a);
  t.expect(inj.injective && inj.preserving && inj.reflecting, "dense injection");

  std::mt19937_64 rng(default_seed());
  std::uniform_int_distribution<std::int64_t> num(-40, 40), den(1, 8);
  std::vector<Rational> many;
  for (int i = 0; i < 60; ++i) many.emplace_back(num(rng), den(rng));
  std::sort(many.begin(), many.end());
  many.erase(std::unique(many.begin(), many.end()), many.end());
  auto big = lpa::at_fd(q, many);
  t.expect(lpa::dense_cor_injection(big).injective, "dense injection on a larger fragment");
  std::uniform_int_distribution<std::size_t> pick(0, big.size() - 1);
  std::size_t mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    auto x = pick(rng), y = pick(rng);
    if (big.leq(x, y) != rules_leq(classify(big.elements()[x]), classify(big.elements()[y]))) ++mismatches;
  }
  t.expect(mismatches == 0, std::to_string(mismatches) + " comparator mismatches");
  t.summary = std::to_string(probes.size()) + " probes -> " + std::to_string(probes.size()) +
              " successor cuts + 1 bottom; injection injective; 10^3 pairs agree with rules";
}

void lpa_numbers(Tally& t) {
  auto d = card::catalog("lpa(rats,aleph(0))", card::AxiomMode::empty_table());
  t.expect(d.cardinality.value == "aleph(0)" && d.scdim.value == "2^aleph(0)", "LPA over Q: " + d.cardinality.value + ", " + d.scdim.value);
  auto three = order::FinitePoset::chain(3);
  t.expect(lpa::count_paths(lpa::build_ep(three, lpa::Multiplicity::finite(1))).exact == 7, "3-chain mult 1");
  t.expect(lpa::count_paths(lpa::build_ep(three, lpa::Multiplicity::finite(2))).exact == 13, "3-chain mult 2");
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& o : oracle::natural_posets(n))
      for (std::uint64_t m = 1; m <= 2; ++m) {
        ++graphs;
        auto got = lpa::count_paths(lpa::build_ep(to_poset(o), lpa::Multiplicity::finite(m))).exact;
        if (got != oracle::count_paths_dfs(o, m)) t.expect(false, "path count mismatch");
      }
  t.summary = "(aleph(0), 2^aleph(0)) for Q; " + std::to_string(graphs) + " graphs match path enumeration";
}

void decision_table(Tally& t) {
  using card::Answer;
  auto empty = card::AxiomMode::empty_table();
  struct Row {
    const char* k;
    const char* l;
    card::AxiomMode mode;
    card::RingKindFilter kind;
    Answer answer;
    const char* rule;
  };
  const auto any = card::RingKindFilter::Any, val = card::RingKindFilter::Valuation;
  std::vector<Row> rows{
      {"4", "0", empty, any, Answer::Yes, "R1"},
      {"5", "1", empty, any, Answer::No, "R1"},
      {"1", "0", empty, any, Answer::No, "R0"},
      {"aleph(0)", "aleph(0)", empty, any, Answer::Yes, "R2"},
      {"aleph(0)", "2^aleph(0)", empty, any, Answer::Yes, "R5"},
      {"aleph(1)", "aleph(2)", card::AxiomMode::gch(), any, Answer::Yes, "R4"},
      {"aleph(1)", "aleph(2)", empty, any, Answer::Unknown, "R6"},
      {"aleph(1)", "2^aleph(1)", empty, any, Answer::Unknown, "R6"},
      {"6", "0", empty, val, Answer::No, "R1"},
      {"8", "0", empty, val, Answer::Yes, "R1"},
  };
  for (const auto& r : rows) {
    auto v = card::exists_ring(card::Cardinal::parse(r.k), card::CardExpr::parse(r.l), r.mode, r.kind);
    std::string what = std::string("(") + r.k + ", " + r.l + ")";
    t.expect(v.answer == r.answer, what + " answered " + card::to_string(v.answer));
    t.expect(v.rule == r.rule, what + " used rule " + v.rule);
    t.expect(!v.anchor.empty(), what + " has no anchor");
  }
  auto v = card::exists_ring(card::Cardinal::parse("aleph(1)"), card::CardExpr::parse("2^aleph(1)"), empty);
  bool independent = false;
  for (const auto& n : v.notes) independent = independent || n.rfind("independent", 0) == 0;
  t.expect(independent, "independence note for (aleph(1), 2^aleph(1))");
  auto psl = card::predicates(card::Cardinal::parse("aleph(0)"), empty);
  t.expect(psl.psl == card::Tri::True, "PSL(aleph(0))");
  auto b = card::catalog("berry(aleph(w))", empty);
  t.expect(b.cdim.value == "aleph(w)" && b.scdim.value == "none", "berry(aleph(w))");
  t.summary = std::to_string(rows.size()) + " rows with rule ids and anchors; berry(aleph(w)) = (aleph(w), none)";
}

std::filesystem::path g_golden_dir;

void golden_files(Tally& t) {
  auto cases = golden::load(g_golden_dir);
  t.expect(!cases.empty(), "no golden cases found in " + g_golden_dir.string());
  std::size_t dot = 0;
  for (const auto& c : cases) {
    auto got = golden::run(g_golden_dir, c);
    auto path = golden::expected_path(g_golden_dir, c);
    t.expect(std::filesystem::exists(path) && golden::slurp(path) == got.out && got.code == c.code, "golden " + c.name);
    for (const auto& a : c.args) dot += a == "--dot";
  }
  t.summary = std::to_string(cases.size()) + " cases byte-exact, " + std::to_string(dot) + " DOT exports";
}

}  // namespace

int main(int argc, char** argv) {
  g_golden_dir = std::filesystem::path(KRULLKIT_GOLDEN_DIR);
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--golden-dir" && i + 1 < argc) g_golden_dir = argv[++i];
    else only.insert(std::stoi(a));
  }
  g_golden_dir = std::filesystem::absolute(g_golden_dir);

  std::vector<Criterion> all{
      {1, "rank/concatenation", 10, rank_concatenation},
      {2, "tree construction", 30, tree_construction},
      {3, "valuation spectrum", 1, valuation_spectrum},
      {4, "C-order lemma", 60, c_order_lemma},
      {5, "cut construction", 60, cut_construction},
      {6, "finite ded", 30, finite_ded},
      {7, "completion degeneracy and chain lemma", 120, completion_degeneracy},
      {8, "completion fragment over Q", 30, rational_fragment},
      {9, "LPA numbers", 30, lpa_numbers},
      {10, "decision engine table", 1, decision_table},
      {11, "golden files", 10, golden_files},
  };
  int failed = 0;
  for (const auto& c : all) {
    if (!only.empty() && !only.count(c.id)) continue;
    Tally t;
    auto start = std::chrono::steady_clock::now();
    std::string crash;
    try {
      c.body(t);
    } catch (const std::exception& e) {
      crash = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = crash.empty() && t.failures.empty() && secs < c.limit_s;
    failed += !ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", secs, c.limit_s);
    std::cout << (ok ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title << "  [" << timing << ", "
              << t.checks << " checks]";
    if (!t.summary.empty() && crash.empty()) std::cout << "  " << t.summary;
    std::cout << "\n";
    if (!crash.empty()) std::cout << "      exception: " << crash << "\n";
    if (secs >= c.limit_s) std::cout << "      over the time limit\n";
    for (std::size_t i = 0; i < t.failures.size() && i < 5; ++i) std::cout << "      " << t.failures[i] << "\n";
    if (t.failures.size() > 5) std::cout << "      ... " << t.failures.size() - 5 << " more\n";
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
