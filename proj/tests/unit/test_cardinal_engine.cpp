#include <doctest.h>

#include <random>

#include "krullkit/cardinal_engine.hpp"
#include "krullkit/error.hpp"

using namespace krullkit;
using namespace krullkit::card;

namespace {

Cardinal C(const char* s) { return Cardinal::parse(s); }
CardExpr E(const char* s) { return CardExpr::parse(s); }

// Independent model of cardinal sum and product: finite values add and
// multiply, otherwise the larger infinite one wins (zero kills a product).
Cardinal model_add(const Cardinal& a, const Cardinal& b) {
  if (a.is_finite() && b.is_finite()) return Cardinal::finite(a.value() + b.value());
  return a < b ? b : a;
}
Cardinal model_mul(const Cardinal& a, const Cardinal& b) {
  if (a.is_finite() && b.is_finite()) return Cardinal::finite(a.value() * b.value());
  if ((a.is_finite() && a.value() == 0) || (b.is_finite() && b.value() == 0)) return Cardinal::finite(0);
  return a < b ? b : a;
}

Cardinal random_cardinal(std::mt19937_64& rng) {
  switch (rng() % 4) {
    case 0: return Cardinal::finite(rng() % 50);
    case 1: return Cardinal::aleph(rng() % 6);
    case 2: return Cardinal::aleph(Ordinal::omega_power(1) + Ordinal::natural(rng() % 4));
    default: return Cardinal::aleph(Ordinal::omega_power(1, 2) + Ordinal::natural(rng() % 3));
  }
}

}  // namespace

TEST_SUITE("cardinal_engine") {

TEST_CASE("ordinal grammar and arithmetic") {
  CHECK(Ordinal::parse("w*2+3").to_string() == "w*2+3");
  CHECK(Ordinal::parse("ω").to_string() == "w");
  CHECK(Ordinal::parse("w^2").is_limit());
  CHECK(Ordinal::parse("w+1").is_successor());
  CHECK(Ordinal::parse("0").is_zero());
  CHECK(Ordinal::parse("w+1").predecessor() == Ordinal::parse("w"));
  CHECK(Ordinal::natural(1) + Ordinal::parse("w") == Ordinal::parse("w"));
  CHECK(Ordinal::parse("w") + Ordinal::natural(1) == Ordinal::parse("w+1"));
  CHECK(Ordinal::parse("w*2+5") + Ordinal::parse("w") == Ordinal::parse("w*3"));
  CHECK(Ordinal::parse("w") < Ordinal::parse("w+1"));
  CHECK(Ordinal::parse("w*3") < Ordinal::parse("w^2"));
  CHECK_THROWS_AS(Ordinal::parse("w^"), Error);
}

TEST_CASE("cardinal grammar") {
  CHECK(C("42").to_string() == "42");
  CHECK(C("aleph(w*2+3)").to_string() == "aleph(w*2+3)");
  CHECK(C("ℵ(1)") == Cardinal::aleph(1));
  CHECK(C("aleph(0)").successor() == Cardinal::aleph(1));
  CHECK(C("aleph(w)").successor() == C("aleph(w+1)"));
  CHECK(C("7") < C("aleph(0)"));
  CHECK(E("2^aleph(1)").to_string() == "2^aleph(1)");
  CHECK_THROWS_AS(C("aleph(x)"), Error);
  CHECK_THROWS_AS(C("-1"), Error);
}

TEST_CASE("sum and product follow the max rule") {
  CHECK(card_add(C("aleph(3)"), C("aleph(1)")) == C("aleph(3)"));
  CHECK(card_add(C("2"), C("3")) == C("5"));
  CHECK(card_mul(C("aleph(0)"), C("7")) == C("aleph(0)"));
  CHECK(card_mul(C("aleph(0)"), C("0")) == C("0"));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 1000; ++t) {
    auto a = random_cardinal(rng), b = random_cardinal(rng), c = random_cardinal(rng);
    CHECK(card_add(a, b) == model_add(a, b));
    CHECK(card_mul(a, b) == model_mul(a, b));
    CHECK(card_add(a, b) == card_add(b, a));
    CHECK(card_mul(a, b) == card_mul(b, a));
    CHECK(card_add(card_add(a, b), c) == card_add(a, card_add(b, c)));
    CHECK(card_mul(card_mul(a, b), c) == card_mul(a, card_mul(b, c)));
  }
}

TEST_CASE("continuum function") {
  CHECK(card_exp2(C("aleph(0)"), AxiomMode::gch()).to_string() == "aleph(1)");
  CHECK(card_exp2(C("aleph(0)"), AxiomMode::cohen()).to_string() == "aleph(2)");
  CHECK(card_exp2(C("aleph(1)"), AxiomMode::cohen()).to_string() == "aleph(2)");
  CHECK(card_exp2(C("5"), AxiomMode::empty_table()).to_string() == "32");
  CHECK(card_exp2(C("aleph(1)"), AxiomMode::empty_table()).to_string() == "[aleph(2), inf)");
  // neighbours bound a missing entry from both sides
  auto t = AxiomMode::table({{Ordinal::natural(0), Ordinal::natural(2)}, {Ordinal::natural(2), Ordinal::natural(5)}});
  CHECK(card_exp2(C("aleph(1)"), t).to_string() == "[aleph(2), aleph(5)]");
  CHECK_THROWS_AS(AxiomMode::table({{Ordinal::natural(1), Ordinal::natural(1)}}), Error);
  CHECK_THROWS_AS(AxiomMode::table({{Ordinal::natural(0), Ordinal::natural(4)}, {Ordinal::natural(1), Ordinal::natural(3)}}),
                  Error);
}

TEST_CASE("continuum function is monotone and GCH gives successors") {
  std::vector<AxiomMode> modes{AxiomMode::gch(), AxiomMode::cohen(), AxiomMode::empty_table(),
                               AxiomMode::table({{Ordinal::natural(0), Ordinal::natural(3)}}, Ordinal::natural(4))};
  for (const auto& m : modes)
    for (std::uint64_t i = 0; i < 8; ++i) {
      auto a = card_exp2(Cardinal::aleph(i), m), b = card_exp2(Cardinal::aleph(i + 1), m);
      CHECK(a.lo <= b.lo);
      if (a.hi && b.hi) CHECK(*a.hi <= *b.hi);
      if (m.kind() == AxiomMode::Kind::GCH) CHECK(a.to_string() == Cardinal::aleph(i + 1).to_string());
    }
}

TEST_CASE("cofinality") {
  CHECK(cofinality(C("aleph(0)")) == C("aleph(0)"));
  CHECK(cofinality(C("aleph(w)")) == C("aleph(0)"));
  CHECK(cofinality(C("aleph(2)")) == C("aleph(2)"));
  CHECK(cofinality(C("aleph(w*2+3)")) == C("aleph(w*2+3)"));
  CHECK(cofinality(C("aleph(w^2)")) == C("aleph(0)"));
  CHECK_THROWS_AS(cofinality(C("5")), Error);
}

TEST_CASE("predicates") {
  auto p0 = predicates(C("aleph(0)"), AxiomMode::empty_table());
  CHECK(p0.psl == Tri::True);
  CHECK(p0.regular == Tri::True);
  CHECK(predicates(C("aleph(5)"), AxiomMode::gch()).psl == Tri::True);
  CHECK(predicates(C("aleph(1)"), AxiomMode::cohen()).psl == Tri::False);
  CHECK(predicates(C("aleph(1)"), AxiomMode::empty_table()).psl == Tri::Unknown);
  auto pw = predicates(C("aleph(w)"), AxiomMode::gch());
  CHECK(pw.singular == Tri::True);
  CHECK(pw.limit == Tri::True);
  CHECK(pw.strong_limit == Tri::True);
  CHECK(predicates(C("aleph(w)"), AxiomMode::empty_table()).strong_limit == Tri::Unknown);
}

TEST_CASE("ded bounds") {
  auto g = ded_bounds(C("aleph(0)"), AxiomMode::gch());
  REQUIRE(g.exact);
  CHECK(*g.exact == C("aleph(1)"));
  auto e = ded_bounds(C("aleph(1)"), AxiomMode::empty_table());
  CHECK(e.lower == C("aleph(2)"));
  CHECK(e.upper.to_string() == "2^aleph(1)");
  CHECK_FALSE(e.exact);
  CHECK(e.notes.size() == 1);
  auto c = ded_bounds(C("aleph(0)"), AxiomMode::cohen());
  REQUIRE(c.exact);
  CHECK(*c.exact == C("aleph(2)"));
  for (std::uint64_t i = 0; i < 6; ++i)
    for (const auto& m : {AxiomMode::gch(), AxiomMode::cohen(), AxiomMode::empty_table()})
      CHECK(ded_bounds(Cardinal::aleph(i), m).lower > Cardinal::aleph(i));
  CHECK_THROWS_AS(ded_bounds(C("3"), AxiomMode::gch()), Error);
}

TEST_CASE("ring existence table") {
  auto any = AxiomMode::empty_table();
  struct Row {
    const char* k;
    const char* l;
    AxiomMode mode;
    RingKindFilter kind;
    Answer answer;
    const char* rule;
  };
  std::vector<Row> rows{
      {"4", "0", any, RingKindFilter::Any, Answer::Yes, "R1"},
      {"5", "1", any, RingKindFilter::Any, Answer::No, "R1"},
      {"1", "0", any, RingKindFilter::Any, Answer::No, "R0"},
      {"aleph(0)", "aleph(0)", any, RingKindFilter::Any, Answer::Yes, "R2"},
      {"aleph(0)", "2^aleph(0)", any, RingKindFilter::Any, Answer::Yes, "R5"},
      {"aleph(1)", "aleph(2)", AxiomMode::gch(), RingKindFilter::Any, Answer::Yes, "R4"},
      {"aleph(1)", "aleph(2)", any, RingKindFilter::Any, Answer::Unknown, "R6"},
      {"6", "0", any, RingKindFilter::Valuation, Answer::No, "R1"},
      {"8", "0", any, RingKindFilter::Valuation, Answer::Yes, "R1"},
      {"aleph(0)", "aleph(2)", AxiomMode::gch(), RingKindFilter::Any, Answer::No, "R3"},
  };
  for (const auto& r : rows) {
    auto v = exists_ring(C(r.k), E(r.l), r.mode, r.kind);
    CAPTURE(r.k);
    CAPTURE(r.l);
    CHECK(v.answer == r.answer);
    CHECK(v.rule == r.rule);
    CHECK_FALSE(v.anchor.empty());
  }
  CHECK(exists_ring(C("4"), E("0"), any).witness == std::optional<std::string>("Z/4Z"));
}

TEST_CASE("independence note appears for 2^k at uncountable cofinality") {
  auto v = exists_ring(C("aleph(1)"), E("2^aleph(1)"), AxiomMode::empty_table());
  CHECK(v.answer == Answer::Unknown);
  bool independent = false;
  for (const auto& n : v.notes) independent = independent || n.rfind("independent", 0) == 0;
  CHECK(independent);
  auto w = exists_ring(C("aleph(w)"), E("2^aleph(w)"), AxiomMode::empty_table());
  for (const auto& n : w.notes) CHECK(n.rfind("independent", 0) != 0);
}

TEST_CASE("every dimension up to k is realized for infinite k") {
  for (const auto& m : {AxiomMode::gch(), AxiomMode::cohen(), AxiomMode::empty_table()})
    for (std::uint64_t i = 0; i < 5; ++i) {
      auto k = Cardinal::aleph(i);
      for (std::uint64_t n = 0; n < 5; ++n) CHECK(exists_ring(k, CardExpr{Cardinal::finite(n), false}, m).answer == Answer::Yes);
      for (std::uint64_t j = 0; j <= i; ++j) CHECK(exists_ring(k, CardExpr{Cardinal::aleph(j), false}, m).answer == Answer::Yes);
    }
}

TEST_CASE("verdicts never contradict across modes") {
  // a No in one mode must never be a Yes in a mode that decides more
  for (std::uint64_t i = 0; i < 4; ++i)
    for (std::uint64_t j = 0; j < 7; ++j) {
      CardExpr l{Cardinal::aleph(j), false};
      auto weak = exists_ring(Cardinal::aleph(i), l, AxiomMode::empty_table());
      auto strong = exists_ring(Cardinal::aleph(i), l, AxiomMode::gch());
      if (weak.answer != Answer::Unknown) CHECK(weak.answer == strong.answer);
    }
}

TEST_CASE("catalog entries") {
  auto lpa = catalog("lpa(rats,aleph(0))", AxiomMode::empty_table());
  CHECK(lpa.cardinality.value == "aleph(0)");
  CHECK(lpa.scdim.value == "2^aleph(0)");
  auto poly = catalog("poly(aleph(0),aleph(0))", AxiomMode::empty_table());
  CHECK(poly.cardinality.value == "aleph(0)");
  CHECK(poly.scdim.value == "2^aleph(0)");
  auto berry = catalog("berry(aleph(w))", AxiomMode::empty_table());
  CHECK(berry.cdim.value == "aleph(w)");
  CHECK(berry.scdim.value == "none");
  CHECK_THROWS_AS(catalog("berry(aleph(1))", AxiomMode::empty_table()), Error);
  CHECK_THROWS_AS(catalog("ring(3)", AxiomMode::empty_table()), Error);
  for (int n = 1; n <= 5; ++n) {
    auto v = catalog("valuation(zlex(" + std::to_string(n) + "),aleph(0))", AxiomMode::gch());
    CHECK(v.cdim.value == std::to_string(n));
  }
  CHECK(catalog("lpa(chain:3,aleph(0))", AxiomMode::gch()).scdim.value == "2");
  auto small_field = catalog("lpa(rats,5)", AxiomMode::gch());
  CHECK(small_field.cardinality.value == "aleph(0)");
}

TEST_CASE("witness chains in a polynomial ring") {
  auto w = witness_chain_poly({"0", "1"});
  CHECK(w.primes == std::vector<std::string>{"P[0]", "P[1]"});
  CHECK(w.witnesses == std::vector<std::string>{"X_1/2"});
  CHECK(witness_chain_poly({"3"}).ideals.size() == 1);
  auto s = witness_chain_poly({"1+", "1"});
  CHECK(s.primes == std::vector<std::string>{"P[1]", "P[1+]"});
  CHECK(s.witnesses == std::vector<std::string>{"X_1"});
}

TEST_CASE("strong limit tower") {
  auto t = strong_limit_tower(C("aleph(0)"));
  CHECK(t.stages.size() == 3);
  CHECK(t.psl == Tri::True);
}

}  // TEST_SUITE
