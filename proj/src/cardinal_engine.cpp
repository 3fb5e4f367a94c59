#include "krullkit/cardinal_engine.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "krullkit/error.hpp"
#include "krullkit/lex_groups.hpp"
#include "krullkit/order_core.hpp"
#include "krullkit/rational.hpp"

namespace krullkit::card {

namespace {

std::string strip(std::string_view text) {
  std::string out;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  return out;
}

std::uint64_t parse_natural(std::string_view digits, std::string_view context) {
  std::uint64_t n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    fail(ErrorCode::Parse, "bad number in '" + std::string(context) + "'");
  }
  return n;
}

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
    s.replace(pos, from.size(), to);
}

}  // namespace

// ---------------------------------------------------------------------------
// Ordinal

Ordinal Ordinal::natural(std::uint64_t n) { return n == 0 ? Ordinal{} : omega_power(0, n); }

Ordinal Ordinal::omega_power(std::uint32_t e, std::uint64_t c) {
  Ordinal o;
  if (c > 0) o.terms_.emplace_back(e, c);
  return o;
}

Ordinal Ordinal::parse(std::string_view text) {
  std::string s = strip(text);
  replace_all(s, "ω", "w");
  if (s.empty()) fail(ErrorCode::Parse, "empty ordinal");
  Ordinal out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t plus = s.find('+', pos);
    std::string term = s.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    if (term.empty()) fail(ErrorCode::Parse, "bad ordinal '" + std::string(text) + "'");
    if (term[0] == 'w') {
      std::uint32_t e = 1;
      std::uint64_t c = 1;
      std::string rest = term.substr(1);
      if (!rest.empty() && rest[0] == '^') {
        auto star = rest.find('*');
        e = static_cast<std::uint32_t>(parse_natural(rest.substr(1, star == std::string::npos ? std::string::npos : star - 1), text));
        rest = star == std::string::npos ? "" : rest.substr(star);
      }
      if (!rest.empty()) {
        if (rest[0] != '*') fail(ErrorCode::Parse, "bad ordinal term '" + term + "'");
        c = parse_natural(rest.substr(1), text);
      }
      out = out + omega_power(e, c);
    } else {
      out = out + natural(parse_natural(term, text));
    }
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return out;
}

std::uint64_t Ordinal::finite_value() const {
  if (!is_finite()) fail(ErrorCode::MalformedInput, "ordinal " + to_string() + " is infinite");
  return terms_.empty() ? 0 : terms_.front().second;
}

Ordinal Ordinal::successor() const { return *this + natural(1); }

Ordinal Ordinal::predecessor() const {
  if (!is_successor()) fail(ErrorCode::MalformedInput, "ordinal " + to_string() + " has no predecessor");
  Ordinal out = *this;
  if (--out.terms_.back().second == 0) out.terms_.pop_back();
  return out;
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const std::uint32_t lead = b.terms_.front().first;
  Ordinal out;
  for (const auto& t : a.terms_)
    if (t.first > lead) out.terms_.push_back(t);
  auto it = std::find_if(a.terms_.begin(), a.terms_.end(), [&](const auto& t) { return t.first == lead; });
  auto rest = b.terms_;
  if (it != a.terms_.end()) rest.front().second += it->second;
  out.terms_.insert(out.terms_.end(), rest.begin(), rest.end());
  return out;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  for (std::size_t i = 0; i < std::min(a.terms_.size(), b.terms_.size()); ++i) {
    if (a.terms_[i].first != b.terms_[i].first) return a.terms_[i].first <=> b.terms_[i].first;
    if (a.terms_[i].second != b.terms_[i].second) return a.terms_[i].second <=> b.terms_[i].second;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += "+";
    if (e == 0) {
      out += std::to_string(c);
      continue;
    }
    out += e == 1 ? "w" : "w^" + std::to_string(e);
    if (c != 1) out += "*" + std::to_string(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cardinal

Cardinal Cardinal::finite(std::uint64_t n) {
  Cardinal c;
  c.n_ = n;
  return c;
}

Cardinal Cardinal::aleph(Ordinal index) {
  Cardinal c;
  c.infinite_ = true;
  c.index_ = std::move(index);
  return c;
}

Cardinal Cardinal::parse(std::string_view text) {
  std::string s = strip(text);
  if (s.rfind("aleph(", 0) == 0 && s.back() == ')') return aleph(Ordinal::parse(s.substr(6, s.size() - 7)));
  if (s.rfind("ℵ", 0) == 0) {
    std::string rest = s.substr(std::string("ℵ").size());
    if (rest.size() > 1 && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
    return aleph(Ordinal::parse(rest));
  }
  if (s.empty() || !std::isdigit(static_cast<unsigned char>(s[0]))) {
    fail(ErrorCode::Parse, "cardinal must look like 42 or aleph(w+1), got '" + std::string(text) + "'");
  }
  return finite(parse_natural(s, text));
}

Cardinal Cardinal::successor() const {
  if (!infinite_) {
    if (n_ == UINT64_MAX) fail(ErrorCode::Overflow, "finite cardinal overflow");
    return finite(n_ + 1);
  }
  return aleph(index_.successor());
}

std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b) {
  if (a.infinite_ != b.infinite_) return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (!a.infinite_) return a.n_ <=> b.n_;
  return a.index_ <=> b.index_;
}

std::string Cardinal::to_string() const {
  return infinite_ ? "aleph(" + index_.to_string() + ")" : std::to_string(n_);
}

CardExpr CardExpr::parse(std::string_view text) {
  std::string s = strip(text);
  if (s.rfind("2^", 0) == 0) {
    std::string base = s.substr(2);
    if (base.size() > 2 && base.front() == '(' && base.back() == ')') base = base.substr(1, base.size() - 2);
    return CardExpr{Cardinal::parse(base), true};
  }
  return CardExpr{Cardinal::parse(s), false};
}

std::string CardExpr::to_string() const { return power ? "2^" + base.to_string() : base.to_string(); }

const char* to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

std::string CardRange::to_string() const {
  if (exact()) return lo.to_string();
  return "[" + lo.to_string() + ", " + (hi ? hi->to_string() + "]" : std::string("inf)"));
}

// ---------------------------------------------------------------------------
// Axiom modes

AxiomMode AxiomMode::gch() { return AxiomMode{}; }

AxiomMode AxiomMode::table(std::map<Ordinal, Ordinal> entries, std::optional<Ordinal> gch_from) {
  auto name = [](const Ordinal& a) { return "2^aleph(" + a.to_string() + ")"; };
  for (const auto& [a, v] : entries) {
    if (v < a.successor()) {
      fail(ErrorCode::InconsistentTable, name(a) + " = aleph(" + v.to_string() + ") is below aleph(" +
                                             a.successor().to_string() + ")");
    }
    if (gch_from && a >= *gch_from && v != a.successor()) {
      fail(ErrorCode::InconsistentTable, name(a) + " contradicts 2^k = k^+ from aleph(" + gch_from->to_string() + ")");
    }
    if (gch_from && a < *gch_from && v > gch_from->successor()) {
      fail(ErrorCode::InconsistentTable, name(a) + " exceeds " + name(*gch_from) + " = aleph(" +
                                             gch_from->successor().to_string() + ")");
    }
  }
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    auto next = std::next(it);
    if (next != entries.end() && next->second < it->second) {
      fail(ErrorCode::InconsistentTable, "continuum function decreases between " + name(it->first) + " and " +
                                             name(next->first));
    }
  }
  AxiomMode m;
  m.kind_ = Kind::Table;
  m.entries_ = std::move(entries);
  m.gch_from_ = std::move(gch_from);
  m.name_ = "table";
  return m;
}

AxiomMode AxiomMode::cohen() {
  AxiomMode m = table({{Ordinal::natural(0), Ordinal::natural(2)}}, Ordinal::natural(1));
  m.name_ = "cohen";
  return m;
}

CardRange card_exp2(const Cardinal& k, const AxiomMode& mode) {
  if (k.is_finite()) {
    if (k.value() >= 63) fail(ErrorCode::Overflow, "2^" + k.to_string() + " exceeds 64 bits");
    auto v = Cardinal::finite(std::uint64_t{1} << k.value());
    return {v, v};
  }
  const Ordinal& a = k.index();
  auto exact = [](const Ordinal& v) {
    auto c = Cardinal::aleph(v);
    return CardRange{c, c};
  };
  if (mode.kind() == AxiomMode::Kind::GCH) return exact(a.successor());
  if (auto it = mode.entries().find(a); it != mode.entries().end()) return exact(it->second);
  if (mode.gch_from() && a >= *mode.gch_from()) return exact(a.successor());

  // Unknown entry: squeeze between the neighbours by monotonicity.
  Ordinal lo = a.successor();
  std::optional<Ordinal> hi;
  for (const auto& [b, v] : mode.entries()) {
    if (b < a) lo = std::max(lo, v);
    if (b > a && (!hi || v < *hi)) hi = v;
  }
  if (mode.gch_from() && (!hi || mode.gch_from()->successor() < *hi)) hi = mode.gch_from()->successor();
  CardRange r{Cardinal::aleph(lo), std::nullopt};
  if (hi) r.hi = Cardinal::aleph(*hi);
  return r;
}

CardRange value_of(const CardExpr& e, const AxiomMode& mode) {
  if (e.power) return card_exp2(e.base, mode);
  return {e.base, e.base};
}

Tri known_le(const CardExpr& a, const CardExpr& b, const AxiomMode& mode) {
  if (a == b) return Tri::True;
  if (a.power && b.power && a.base <= b.base) return Tri::True;
  if (!a.power && b.power && a.base <= b.base) return Tri::True;
  if (a.power && !b.power && b.base <= a.base) return Tri::False;
  auto ra = value_of(a, mode), rb = value_of(b, mode);
  if (ra.hi && *ra.hi <= rb.lo) return Tri::True;
  if (rb.hi && *rb.hi < ra.lo) return Tri::False;
  return Tri::Unknown;
}

Tri known_lt(const CardExpr& a, const CardExpr& b, const AxiomMode& mode) {
  if (a == b) return Tri::False;
  if (!a.power && b.power && a.base <= b.base) return Tri::True;
  if (a.power && b.power && b.base <= a.base) return Tri::False;
  if (a.power && !b.power && b.base <= a.base) return Tri::False;
  auto ra = value_of(a, mode), rb = value_of(b, mode);
  if (ra.hi && *ra.hi < rb.lo) return Tri::True;
  if (rb.hi && *rb.hi <= ra.lo) return Tri::False;
  return Tri::Unknown;
}

Tri known_eq(const CardExpr& a, const CardExpr& b, const AxiomMode& mode) {
  if (a == b) return Tri::True;
  auto ra = value_of(a, mode), rb = value_of(b, mode);
  if (ra.exact() && rb.exact()) return ra.lo == rb.lo ? Tri::True : Tri::False;
  if (known_lt(a, b, mode) == Tri::True || known_lt(b, a, mode) == Tri::True) return Tri::False;
  return Tri::Unknown;
}

// ---------------------------------------------------------------------------
// Arithmetic

Cardinal card_add(const Cardinal& a, const Cardinal& b) {
  if (a.is_finite() && b.is_finite()) {
    std::uint64_t s = 0;
    if (__builtin_add_overflow(a.value(), b.value(), &s)) fail(ErrorCode::Overflow, "finite sum overflow");
    return Cardinal::finite(s);
  }
  return std::max(a, b);
}

Cardinal card_mul(const Cardinal& a, const Cardinal& b) {
  if ((a.is_finite() && a.value() == 0) || (b.is_finite() && b.value() == 0)) return Cardinal::finite(0);
  if (a.is_finite() && b.is_finite()) {
    std::uint64_t p = 0;
    if (__builtin_mul_overflow(a.value(), b.value(), &p)) fail(ErrorCode::Overflow, "finite product overflow");
    return Cardinal::finite(p);
  }
  return std::max(a, b);
}

Cardinal cofinality(const Cardinal& k) {
  if (k.is_finite()) fail(ErrorCode::FiniteCardinal, "cofinality is taken of infinite cardinals only");
  // Successor cardinals are regular; every limit ordinal below w^w has
  // cofinality w.
  if (k.index().is_zero() || k.index().is_successor()) return k;
  return Cardinal::aleph(0);
}

namespace {

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::True;
}

// Whether 2^mu <= aleph(alpha) (or < when strict) for every mu < aleph(alpha).
Tri powers_below(const Ordinal& alpha, const AxiomMode& mode, bool strict) {
  if (alpha.is_zero()) return Tri::True;
  const Cardinal target = Cardinal::aleph(alpha);
  auto check = [&](const Ordinal& beta) {
    CardRange r = card_exp2(Cardinal::aleph(beta), mode);
    bool ok_hi = r.hi && (strict ? *r.hi < target : *r.hi <= target);
    bool bad_lo = strict ? r.lo >= target : r.lo > target;
    if (ok_hi) return Tri::True;
    return bad_lo ? Tri::False : Tri::Unknown;
  };
  if (mode.kind() == AxiomMode::Kind::GCH) return strict && alpha.is_successor() ? Tri::False : Tri::True;
  // By monotonicity the largest mu below decides a successor.
  if (alpha.is_successor()) return check(alpha.predecessor());

  Ordinal bound = alpha;
  if (mode.gch_from() && *mode.gch_from() < bound) bound = *mode.gch_from();
  if (bound.is_finite()) {
    Tri acc = Tri::True;
    for (std::uint64_t b = 0; b < bound.finite_value(); ++b) acc = tri_and(acc, check(Ordinal::natural(b)));
    return acc;
  }
  for (const auto& [b, v] : mode.entries())
    if (b < alpha && check(b) == Tri::False) return Tri::False;
  return Tri::Unknown;
}

}  // namespace

Predicates predicates(const Cardinal& k, const AxiomMode& mode) {
  if (k.is_finite()) fail(ErrorCode::FiniteCardinal, "predicates are defined for infinite cardinals");
  Predicates p;
  bool regular = cofinality(k) == k;
  p.regular = regular ? Tri::True : Tri::False;
  p.singular = regular ? Tri::False : Tri::True;
  p.successor = k.index().is_successor() ? Tri::True : Tri::False;
  p.limit = k.index().is_successor() ? Tri::False : Tri::True;
  p.psl = powers_below(k.index(), mode, false);
  p.strong_limit = powers_below(k.index(), mode, true);
  return p;
}

DedBounds ded_bounds(const Cardinal& k, const AxiomMode& mode) {
  if (k.is_finite()) fail(ErrorCode::FiniteCardinal, "ded bounds are stated for infinite cardinals");
  DedBounds d{k.successor(), CardExpr{k, true}, card_exp2(k, mode), std::nullopt, {}};
  if (mode.kind() == AxiomMode::Kind::GCH) {
    d.exact = d.lower;
  } else if (k.index().is_zero()) {
    // Q is dense in R, so ded(aleph(0)) = 2^aleph(0) outright.
    if (d.upper_value.exact()) d.exact = d.upper_value.lo;
    d.notes.push_back("ded(aleph(0)) = 2^aleph(0)");
  } else if (d.upper_value.exact() && d.upper_value.lo == d.lower) {
    d.exact = d.lower;
  }
  if (cofinality(k) > Cardinal::aleph(0)) {
    d.notes.push_back("consistently ded(" + k.to_string() + ") < 2^" + k.to_string() + ", since cf(" +
                      k.to_string() + ") > aleph(0)");
  }
  return d;
}

// ---------------------------------------------------------------------------
// Ring existence

const char* to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "Yes";
    case Answer::No: return "No";
    case Answer::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

bool prime_power(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    return n == 1;
  }
  return true;
}

Verdict verdict(Answer a, std::string rule, std::string anchor) {
  Verdict v;
  v.answer = a;
  v.rule = std::move(rule);
  v.anchor = std::move(anchor);
  return v;
}

}  // namespace

Verdict exists_ring(const Cardinal& k, const CardExpr& l, const AxiomMode& mode, RingKindFilter kind) {
  const bool lambda_zero = !l.power && l.base == Cardinal::finite(0);
  const CardExpr kexpr{k, false};
  const CardExpr two_k{k, true};

  if (k < Cardinal::finite(2)) {
    return verdict(Answer::No, "R0", "a ring with fewer than two elements has no prime ideals");
  }
  if (k.is_finite()) {
    if (!lambda_zero) {
      return verdict(Answer::No, "R1", "every finite commutative ring has Krull dimension 0");
    }
    if (kind == RingKindFilter::Valuation) {
      if (!prime_power(k.value())) {
        return verdict(Answer::No, "R1",
                       "valuation rings are local and a finite local ring has prime-power cardinality");
      }
      auto v = verdict(Answer::Yes, "R1", "a finite field is a valuation ring of Krull dimension 0");
      v.witness = "the field with " + k.to_string() + " elements";
      return v;
    }
    auto v = verdict(Answer::Yes, "R1", "Z/kZ is a ring with k elements and Krull dimension 0");
    v.witness = "Z/" + k.to_string() + "Z";
    return v;
  }
  if (known_le(l, kexpr, mode) == Tri::True) {
    auto v = verdict(Answer::Yes, "R2",
                     "for infinite k and l <= k, a field of cardinality k with a valuation whose value group "
                     "is the lexicographic sum of l copies of Z has a valuation ring of Krull dimension l");
    v.witness = lambda_zero ? "a field of cardinality " + k.to_string()
                            : "valuation ring with value group the lexicographic sum of " + l.to_string() +
                                  " copies of Z";
    return v;
  }
  if (known_lt(two_k, l, mode) == Tri::True) {
    return verdict(Answer::No, "R3", "the Krull dimension of a ring R is at most 2^|R|");
  }
  if (mode.kind() == AxiomMode::Kind::GCH && known_le(l, two_k, mode) == Tri::True) {
    return verdict(Answer::Yes, "R4",
                   "under GCH every l <= 2^k is the Krull dimension of a valuation ring of cardinality k");
  }
  const CardExpr k_plus{k.successor(), false};
  if (known_eq(two_k, k_plus, mode) == Tri::True && known_eq(l, k_plus, mode) == Tri::True) {
    return verdict(Answer::Yes, "R4b",
                   "every infinite k carries a valuation ring of Krull dimension above k, and that dimension "
                   "is at most 2^k = k^+");
  }
  if (predicates(k, mode).psl == Tri::True && known_eq(l, two_k, mode) == Tri::True) {
    return verdict(Answer::Yes, "R5",
                   "for a PSL cardinal k the tree group yields a valuation ring of cardinality k and strong "
                   "Krull dimension 2^k");
  }
  auto v = verdict(Answer::Unknown, "R6", "no rule decides this case in the " + mode.name() + " axiom mode");
  v.notes.push_back("some ring of cardinality " + k.to_string() + " has Krull dimension strictly above " +
                    k.to_string());
  if (cofinality(k) > Cardinal::aleph(0) && known_eq(l, two_k, mode) != Tri::False) {
    v.notes.push_back("independent: for cf(" + k.to_string() + ") > aleph(0) it is undecidable in ZFC whether a ring of cardinality " +
                      k.to_string() + " has Krull dimension 2^" + k.to_string());
  }
  if (known_lt(kexpr, l, mode) == Tri::True && known_lt(l, two_k, mode) != Tri::False &&
      known_eq(l, two_k, mode) != Tri::True) {
    v.notes.push_back("realizability of dimensions strictly between k and 2^k is open without further axioms");
  }
  return v;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

struct Call {
  std::string name;
  std::vector<std::string> args;
};

Call parse_call(std::string_view text) {
  std::string s = strip(text);
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') {
    fail(ErrorCode::UnsupportedDescriptor, "descriptor must look like name(arg, ...), got '" + s + "'");
  }
  Call c{s.substr(0, open), {}};
  int depth = 0;
  std::string cur;
  for (std::size_t i = open + 1; i + 1 < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      c.args.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  c.args.push_back(cur);
  return c;
}

Quantity exact_q(const Cardinal& c, std::string why) { return {c.to_string(), c.to_string(), std::move(why)}; }

Quantity power_q(const Cardinal& k, const AxiomMode& mode, std::string why) {
  return {"2^" + k.to_string(), card_exp2(k, mode).to_string(), std::move(why)};
}

void require_args(const Call& c, std::size_t n) {
  if (c.args.size() != n) {
    fail(ErrorCode::UnsupportedDescriptor, c.name + " takes " + std::to_string(n) + " arguments");
  }
}

RingDescriptor catalog_valuation(const Call& c, const std::string& text) {
  require_args(c, 2);
  RingDescriptor d;
  d.kind = RingKind::ValuationFromGroup;
  d.text = text;
  Cardinal k = Cardinal::parse(c.args[1]);
  Cardinal rank;
  std::string why = "primes of the valuation ring correspond to the isolated subgroups of the value group";
  const std::string& r = c.args[0];
  if (r.rfind("zlex(", 0) == 0 || r.rfind("zrevlex(", 0) == 0 || r.rfind("ztree(", 0) == 0) {
    auto g = lex::parse_group(r);
    auto spectrum = lex::valuation_spectrum(g);
    rank = Cardinal::finite(lex::rank(g).size());
    if (spectrum.krull_dimension() != rank.value()) {
      fail(ErrorCode::MalformedInput, "spectrum length disagrees with the rank of " + r);
    }
    why += "; " + r + " has " + std::to_string(spectrum.primes.size()) + " of them";
  } else {
    rank = Cardinal::parse(r);
  }
  if (k.is_finite()) {
    if (!(rank == Cardinal::finite(0)) || !prime_power(k.value())) {
      fail(ErrorCode::UnsupportedDescriptor, "finite valuation rings are fields of prime-power order");
    }
  } else if (rank > k) {
    fail(ErrorCode::UnsupportedDescriptor, "a value group of rank " + rank.to_string() +
                                               " does not fit a field of cardinality " + k.to_string());
  }
  d.cardinality = exact_q(k, "the valuation ring of a field of cardinality " + k.to_string());
  d.cdim = exact_q(rank, why);
  d.scdim = exact_q(rank, "the isolated subgroups form a chain, so the bound is attained");
  return d;
}

RingDescriptor catalog_poly(const Call& c, const std::string& text, const AxiomMode& mode) {
  require_args(c, 2);
  Cardinal base = Cardinal::parse(c.args[0]);
  Cardinal k = Cardinal::parse(c.args[1]);
  if (k.is_finite()) fail(ErrorCode::UnsupportedDescriptor, "poly needs infinitely many variables");
  if (base < Cardinal::finite(2) || base > k) {
    fail(ErrorCode::UnsupportedDescriptor, "poly(base, vars) needs 2 <= |base| <= vars");
  }
  RingDescriptor d;
  d.kind = RingKind::PolyRing;
  d.text = text;
  d.cardinality = exact_q(k, "R[X_i | i < k] has cardinality max(|R|, k) = k");
  DedBounds ded = ded_bounds(k, mode);
  std::string ded_value = ded.exact ? ded.exact->to_string()
                                    : "[" + ded.lower.to_string() + ", " + ded.upper_value.to_string() + "]";
  std::string ded_why = "c.dim(R[X_i | i < k]) = ded(k) for algebras over a division ring";
  bool equals_power = k.index().is_zero();
  d.cdim = {equals_power ? "2^" + k.to_string() : "ded(" + k.to_string() + ")",
            equals_power ? card_exp2(k, mode).to_string() : ded_value, ded_why};
  Tri psl = predicates(k, mode).psl;
  if (mode.kind() == AxiomMode::Kind::GCH || psl == Tri::True) {
    d.scdim = power_q(k, mode, "k is PSL, so a chain of 2^k subsets of k gives a chain of 2^k primes");
  } else {
    d.scdim = {"[" + k.successor().to_string() + ", 2^" + k.to_string() + "]",
               "[" + k.successor().to_string() + ", " + card_exp2(k, mode).to_string() + "]",
               "a chain of k^+ subsets of k always exists; 2^k bounds every chain"};
  }
  return d;
}

RingDescriptor catalog_lpa(const Call& c, const std::string& text) {
  require_args(c, 2);
  const std::string& chain = c.args[0];
  Cardinal field = Cardinal::parse(c.args[1]);
  if (field.is_finite() && !prime_power(field.value())) {
    fail(ErrorCode::UnsupportedDescriptor, "a finite field has prime-power order");
  }
  RingDescriptor d;
  d.kind = RingKind::LpaFromChain;
  d.text = text;
  const Cardinal aleph0 = Cardinal::aleph(0);
  Cardinal size_p, scdim;
  std::string scdim_text, why;
  if (chain.rfind("chain:", 0) == 0) {
    std::uint64_t n = parse_natural(chain.substr(6), chain);
    if (n == 0) fail(ErrorCode::UnsupportedDescriptor, "chain:n needs n >= 1");
    size_p = Cardinal::finite(n);
    scdim = Cardinal::finite(n - 1);
    scdim_text = scdim.to_string();
    why = "the spectrum is the chain itself; " + std::to_string(n) + " primes give " + std::to_string(n - 1) +
          " containments";
  } else {
    auto sc = order::SymbolicChain::parse(chain);
    size_p = aleph0;
    switch (sc.kind()) {
      case order::ChainKind::Rats:
        scdim_text = "2^aleph(0)";
        why = "sc.dim equals the cardinality of the completion, which contains a cut for every real";
        break;
      case order::ChainKind::Ints:
      case order::ChainKind::Omega:
      case order::ChainKind::OmegaOp:
        scdim = aleph0;
        scdim_text = "aleph(0)";
        why = "sc.dim equals the cardinality of the completion, which adds at most one bottom point";
        break;
      default:
        fail(ErrorCode::UnsupportedDescriptor, "lpa supports rats, ints, omega, omega_op and chain:n");
    }
  }
  // |E| counts vertices and the countably many parallel edges.
  Cardinal eps = size_p > Cardinal::finite(1) ? std::max(size_p, aleph0) : size_p;
  Cardinal lo = std::max(field, eps);
  Cardinal hi = card_mul(card_mul(aleph0, field), card_mul(eps, eps));
  std::string size_why = "max(|K|, |E|) <= |L_K(E)| <= aleph(0) * |K| * |E|^2";
  if (lo == hi) {
    d.cardinality = exact_q(lo, size_why);
  } else {
    std::string range = "[" + lo.to_string() + ", " + hi.to_string() + "]";
    d.cardinality = {range, range, size_why};
  }
  d.scdim = {scdim_text, scdim_text, why};
  d.cdim = {scdim_text, scdim_text, "the spectrum is a chain, so c.dim equals sc.dim"};
  return d;
}

RingDescriptor catalog_berry(const Call& c, const std::string& text) {
  require_args(c, 1);
  Cardinal k = Cardinal::parse(c.args[0]);
  if (k.is_finite() || k.index().is_successor()) {
    fail(ErrorCode::UnsupportedDescriptor, "berry(k) needs an infinite limit cardinal, got " + k.to_string());
  }
  RingDescriptor d;
  d.kind = RingKind::BerryFamily;
  d.text = text;
  d.cardinality = exact_q(k, "the disjoint union of well-orders of every size below k has cardinality k");
  d.cdim = exact_q(k, "chains of every cardinality below k exist, so c.dim = sup{l | l < k} = k");
  d.scdim = {"none", "none", "every chain of primes lies in one summand, so no chain has cardinality k"};
  return d;
}

}  // namespace

RingDescriptor catalog(std::string_view descriptor, const AxiomMode& mode) {
  Call c = parse_call(descriptor);
  const std::string text = strip(descriptor);
  if (c.name == "valuation") return catalog_valuation(c, text);
  if (c.name == "poly") return catalog_poly(c, text, mode);
  if (c.name == "lpa") return catalog_lpa(c, text);
  if (c.name == "berry") return catalog_berry(c, text);
  fail(ErrorCode::UnsupportedDescriptor, "unknown descriptor '" + c.name + "'");
}

PolyWitnessChain witness_chain_poly(const std::vector<std::string>& cuts) {
  if (cuts.empty()) fail(ErrorCode::MalformedInput, "need at least one cut");
  // (q, closed): closed cuts also contain q itself.
  std::set<std::pair<Rational, bool>> parsed;
  for (const auto& raw : cuts) {
    std::string s = strip(raw);
    bool closed = !s.empty() && s.back() == '+';
    if (closed) s.pop_back();
    parsed.emplace(Rational::parse(s), closed);
  }
  PolyWitnessChain out;
  std::vector<std::pair<Rational, bool>> sorted(parsed.begin(), parsed.end());
  for (const auto& [q, closed] : sorted) {
    out.primes.push_back("P[" + q.to_string() + (closed ? "+" : "") + "]");
    out.ideals.push_back("<X_i : i " + std::string(closed ? "<=" : "<") + " " + q.to_string() + ">");
  }
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    const auto& [q, closed] = sorted[i];
    const auto& next = sorted[i + 1].first;
    out.witnesses.push_back("X_" + (q == next ? q : midpoint(q, next)).to_string());
  }
  return out;
}

Tower strong_limit_tower(const Cardinal& base, std::size_t shown) {
  if (base.is_finite()) fail(ErrorCode::FiniteCardinal, "the tower starts from an infinite cardinal");
  Tower t;
  std::string stage = base.to_string();
  for (std::size_t i = 0; i < shown; ++i) {
    t.stages.push_back("k_" + std::to_string(i) + " = " + stage);
    stage = i == 0 ? "2^" + stage : "2^(" + stage + ")";
  }
  t.symbol = "sup_n k_n, k_0 = " + base.to_string() + ", k_(n+1) = 2^k_n";
  return t;
}

}  // namespace krullkit::card
