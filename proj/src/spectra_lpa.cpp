#include "krullkit/spectra_lpa.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "krullkit/error.hpp"

namespace krullkit::lpa {

using order::ChainKind;
using order::FinitePoset;
using order::SymbolicChain;

// ---------------------------------------------------------------------------
// Multiplicity

Multiplicity Multiplicity::finite(std::uint64_t m) {
  if (m == 0) fail(ErrorCode::MalformedInput, "edge multiplicity must be at least 1");
  Multiplicity out;
  out.m_ = m;
  return out;
}

Multiplicity Multiplicity::omega() {
  Multiplicity out;
  out.infinite_ = true;
  out.m_ = 0;
  return out;
}

Multiplicity Multiplicity::parse(std::string_view text) {
  if (text == "omega" || text == "ω" || text == "w") return omega();
  std::uint64_t m = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), m);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(ErrorCode::Parse, "multiplicity must be a positive integer or omega");
  }
  return finite(m);
}

std::string Multiplicity::to_string() const { return infinite_ ? "ω" : std::to_string(m_); }

// ---------------------------------------------------------------------------
// E_P

LpaGraph build_ep(const FinitePoset& p, Multiplicity mult) {
  LpaGraph g;
  g.vertices_ = p.elements();
  for (auto [hi, lo] : p.strict_pairs_descending()) g.arcs_.push_back({hi, lo, mult});
  if (!g.is_acyclic()) fail(ErrorCode::MalformedInput, "E_P came out cyclic");
  return g;
}

bool LpaGraph::is_acyclic() const {
  // Kahn's algorithm.
  std::vector<std::size_t> indeg(vertices_.size(), 0);
  for (const auto& a : arcs_) ++indeg[a.range];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& a : arcs_)
      if (a.source == v && --indeg[a.range] == 0) ready.push_back(a.range);
  }
  return seen == vertices_.size();
}

std::vector<std::string> LpaGraph::relations() const {
  std::vector<std::string> out{
      "(V) v w = [v = w] v for all vertices v, w",
      "(E1) s(e) e = e = e r(e) for every edge e",
      "(E2) r(e) e* = e* = e* s(e) for every edge e",
      "(CK1) e* f = [e = f] r(e) for all edges e, f",
  };
  auto regular = regular_vertices(*this);
  if (regular.empty()) {
    out.push_back("(CK2) vacuous: no regular vertices");
  } else {
    std::string line = "(CK2) v = sum of e e* over s(e) = v, for v in {";
    for (std::size_t i = 0; i < regular.size(); ++i) line += (i ? "," : "") + regular[i];
    out.push_back(line + "}");
  }
  return out;
}

std::vector<std::string> regular_vertices(const LpaGraph& g) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    bool any = false, finite = true;
    for (const auto& a : g.arcs()) {
      if (a.source != v) continue;
      any = true;
      finite = finite && a.mult.is_finite();
    }
    if (any && finite) out.push_back(g.vertex_name(v));
  }
  return out;
}

std::string PathCount::to_string() const {
  return countably_infinite ? "aleph(0)" : std::to_string(exact);
}

__extension__ typedef unsigned __int128 U128;

PathCount count_paths(const LpaGraph& g) {
  PathCount out;
  for (const auto& a : g.arcs())
    if (!a.mult.is_finite()) out.countably_infinite = true;
  if (out.countably_infinite) return out;

  const std::size_t n = g.vertices().size();
  // from[v] = paths starting at v; arcs always descend, so memoized DFS works.
  std::vector<std::optional<U128>> from(n);
  auto limit = static_cast<U128>(UINT64_MAX);
  auto paths = [&](auto&& self, std::size_t v) -> U128 {
    if (from[v]) return *from[v];
    U128 total = 1;
    for (const auto& a : g.arcs()) {
      if (a.source != v) continue;
      total += static_cast<U128>(a.mult.count()) * self(self, a.range);
      if (total > limit) fail(ErrorCode::Overflow, "path count exceeds 64 bits");
    }
    from[v] = total;
    return total;
  };
  U128 total = 0;
  for (std::size_t v = 0; v < n; ++v) {
    total += paths(paths, v);
    if (total > limit) fail(ErrorCode::Overflow, "path count exceeds 64 bits");
  }
  out.exact = static_cast<std::uint64_t>(total);
  return out;
}

std::string export_dot(const LpaGraph& g) {
  std::vector<std::size_t> order(g.vertices().size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return g.vertices()[a] < g.vertices()[b]; });
  std::vector<Arc> arcs = g.arcs();
  std::sort(arcs.begin(), arcs.end(), [&](const Arc& a, const Arc& b) {
    const auto& v = g.vertices();
    return std::tie(v[a.source], v[a.range]) < std::tie(v[b.source], v[b.range]);
  });

  std::ostringstream os;
  os << "digraph E_P {\n";
  for (std::size_t v : order) os << "  \"" << g.vertex_name(v) << "\";\n";
  for (const auto& a : arcs) {
    std::string line = "  \"" + g.vertex_name(a.source) + "\" -> \"" + g.vertex_name(a.range) + "\"";
    if (a.mult.is_finite()) {
      for (std::uint64_t i = 0; i < a.mult.count(); ++i) os << line << ";\n";
    } else {
      os << line << " [label=\"ω\", style=bold];\n";
    }
  }
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Subset preorder on finite posets

bool subset_preceq(const std::vector<std::size_t>& s1, const std::vector<std::size_t>& s2,
                   const FinitePoset& p) {
  if (s1.empty() || s2.empty()) fail(ErrorCode::EmptySubset, "the subset preorder needs nonempty subsets");
  for (std::size_t b : s2) {
    bool below = false;
    for (std::size_t a : s1) below = below || p.leq(a, b);
    if (!below) return false;
  }
  return true;
}

bool subset_preceq_mask(std::uint32_t s1, std::uint32_t s2, const FinitePoset& p) {
  if (s1 == 0 || s2 == 0) fail(ErrorCode::EmptySubset, "the subset preorder needs nonempty subsets");
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (!(s2 >> b & 1U)) continue;
    bool below = false;
    for (std::size_t a = 0; a < p.size() && !below; ++a) below = (s1 >> a & 1U) && p.leq(a, b);
    if (!below) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Finitely described subsets

namespace {

bool discrete(const SymbolicChain& c) { return c.kind() != ChainKind::Rats; }

void require_fd_carrier(const SymbolicChain& c) {
  switch (c.kind()) {
    case ChainKind::Rats:
    case ChainKind::Ints:
    case ChainKind::Omega:
    case ChainKind::OmegaOp:
      return;
    default:
      fail(ErrorCode::UnsupportedCarrier, "finitely described subsets need rats, ints, omega or omega_op, not " +
                                              c.to_string());
  }
}

Rational floor_r(const Rational& r) {
  std::int64_t q = r.num() / r.den();
  if (r.num() % r.den() != 0 && r.num() < 0) --q;
  return Rational(q);
}

Rational ceil_r(const Rational& r) { return -floor_r(-r); }

// Lower ends: -inf first, then by value, closed before open.
bool lo_before(const Piece& a, const Piece& b) {
  if (!a.lo || !b.lo) return !a.lo && b.lo;
  if (*a.lo != *b.lo) return *a.lo < *b.lo;
  return a.lo_closed && !b.lo_closed;
}

// Whether the upper end of a reaches at least the upper end of b.
bool hi_reaches(const Piece& a, const Piece& b) {
  if (!a.hi) return true;
  if (!b.hi) return false;
  if (*a.hi != *b.hi) return *a.hi > *b.hi;
  return a.hi_closed || !b.hi_closed;
}

std::string endpoint(const SymbolicChain& c, const std::optional<Rational>& coord, bool low) {
  if (!coord) return low ? "-inf" : "inf";
  return (c.kind() == ChainKind::OmegaOp ? -*coord : *coord).to_string();
}

}  // namespace

FinDescSubset::FinDescSubset(SymbolicChain carrier, std::vector<Piece> pieces)
    : carrier_(std::move(carrier)) {
  require_fd_carrier(carrier_);
  std::vector<Piece> live;
  for (Piece p : pieces) {
    if (discrete(carrier_)) {
      if (p.lo) {
        Rational lo = ceil_r(*p.lo);
        if (!p.lo_closed && lo == *p.lo) lo = lo + 1;
        p.lo = lo;
      }
      if (p.hi) {
        Rational hi = floor_r(*p.hi);
        if (!p.hi_closed && hi == *p.hi) hi = hi - 1;
        p.hi = hi;
      }
      if (carrier_.kind() == ChainKind::Omega && (!p.lo || *p.lo < 0)) p.lo = Rational(0);
      if (carrier_.kind() == ChainKind::OmegaOp && (!p.hi || *p.hi > 0)) p.hi = Rational(0);
      p.lo_closed = p.lo.has_value();
      p.hi_closed = p.hi.has_value();
    }
    if (p.lo && p.hi) {
      if (*p.lo > *p.hi) continue;
      if (*p.lo == *p.hi && !(p.lo_closed && p.hi_closed)) continue;
    }
    if (!p.lo) p.lo_closed = false;
    if (!p.hi) p.hi_closed = false;
    live.push_back(p);
  }
  if (live.empty()) fail(ErrorCode::EmptySubset, "finitely described subset is empty");
  std::sort(live.begin(), live.end(), lo_before);
  for (const auto& p : live) {
    if (!pieces_.empty()) {
      Piece& last = pieces_.back();
      bool touches = !last.hi || !p.lo || *p.lo < *last.hi ||
                     (*p.lo == *last.hi && (last.hi_closed || p.lo_closed)) ||
                     (discrete(carrier_) && *p.lo == *last.hi + 1);
      if (touches) {
        if (!hi_reaches(last, p)) {
          last.hi = p.hi;
          last.hi_closed = p.hi_closed;
        }
        continue;
      }
    }
    pieces_.push_back(p);
  }
}

FinDescSubset FinDescSubset::singleton(SymbolicChain carrier, const Rational& value) {
  Rational c = order::coordinate(carrier, value);
  return FinDescSubset(std::move(carrier), {Piece{c, true, c, true}});
}

FinDescSubset FinDescSubset::whole(SymbolicChain carrier) {
  return FinDescSubset(std::move(carrier), {Piece{}});
}

FinDescSubset FinDescSubset::parse(SymbolicChain carrier, std::string_view text) {
  require_fd_carrier(carrier);
  std::vector<Piece> pieces;
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  std::size_t pos = 0;
  auto end_value = [&](std::string_view v, bool low) -> std::optional<Rational> {
    if (v == "-inf" && low) return std::nullopt;
    if ((v == "inf" || v == "+inf") && !low) return std::nullopt;
    return order::coordinate(carrier, Rational::parse(v));
  };
  while (pos < s.size()) {
    char open = s[pos];
    std::size_t close = s.find_first_of(")]", pos);
    std::size_t comma = s.find(',', pos);
    if ((open != '(' && open != '[') || close == std::string::npos || comma == std::string::npos ||
        comma > close) {
      fail(ErrorCode::Parse, "bad interval in '" + std::string(text) + "'");
    }
    Piece p;
    auto a = end_value(std::string_view(s).substr(pos + 1, comma - pos - 1), true);
    auto b = end_value(std::string_view(s).substr(comma + 1, close - comma - 1), false);
    // Endpoints are read in chain order; for omega_op that reverses values.
    p.lo = a;
    p.hi = b;
    p.lo_closed = open == '[' && p.lo;
    p.hi_closed = s[close] == ']' && p.hi;
    pieces.push_back(p);
    pos = close + 1;
    if (pos < s.size()) {
      if (s.compare(pos, 1, "u") == 0) {
        pos += 1;
      } else if (s.compare(pos, 3, "∪") == 0) {
        pos += 3;
      } else {
        fail(ErrorCode::Parse, "pieces must be joined by 'u'");
      }
    }
  }
  return FinDescSubset(std::move(carrier), std::move(pieces));
}

bool FinDescSubset::contains(const Rational& value) const {
  if (!order::contains(carrier_, order::ChainPoint{0, value})) return false;
  Rational c = order::coordinate(carrier_, value);
  for (const auto& p : pieces_) {
    bool above = !p.lo || *p.lo < c || (p.lo_closed && *p.lo == c);
    bool below = !p.hi || c < *p.hi || (p.hi_closed && *p.hi == c);
    if (above && below) return true;
  }
  return false;
}

ClassKey FinDescSubset::class_key() const {
  const Piece& first = pieces_.front();
  return ClassKey{first.lo, first.lo.has_value() && first.lo_closed};
}

std::string ClassKey::to_string() const {
  if (!infimum) return "-inf";
  return infimum->to_string() + (attained ? "!" : "");
}

std::string FinDescSubset::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (i) out += "u";
    out += p.lo_closed ? "[" : "(";
    out += endpoint(carrier_, p.lo, true) + "," + endpoint(carrier_, p.hi, false);
    out += p.hi_closed ? "]" : ")";
  }
  return out;
}

bool subset_preceq(const FinDescSubset& s1, const FinDescSubset& s2) {
  if (!(s1.carrier() == s2.carrier())) {
    fail(ErrorCode::MalformedInput, "subsets live over different carriers");
  }
  ClassKey a = s1.class_key(), b = s2.class_key();
  if (!a.infimum || !b.infimum) return !a.infimum;
  if (*a.infimum != *b.infimum) return *a.infimum < *b.infimum;
  return a.attained || !b.attained;
}

// ---------------------------------------------------------------------------
// ATPoset

ATPoset::ATPoset(std::vector<ATElement> elements, std::vector<bool> leq, std::string fragment,
                 std::string cardinality)
    : elements_(std::move(elements)),
      leq_(std::move(leq)),
      fragment_(std::move(fragment)),
      cardinality_(std::move(cardinality)) {
  if (leq_.size() != elements_.size() * elements_.size()) {
    fail(ErrorCode::MalformedInput, "relation matrix has wrong size");
  }
}

std::size_t ATPoset::cut_count() const {
  return static_cast<std::size_t>(
      std::count_if(elements_.begin(), elements_.end(), [](const ATElement& e) { return !e.original; }));
}

bool ATPoset::is_partial_order() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq(i, i)) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq(i, j) && leq(j, i)) return false;
      if (!leq(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (leq(j, k) && !leq(i, k)) return false;
    }
  }
  return true;
}

bool ATPoset::is_total() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (!leq(i, j) && !leq(j, i)) return false;
  return true;
}

FinitePoset ATPoset::as_poset() const {
  std::vector<Label> names;
  for (const auto& e : elements_) names.push_back(e.name());
  std::vector<std::vector<bool>> m(size(), std::vector<bool>(size()));
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) m[i][j] = leq(i, j);
  return FinitePoset::from_matrix(std::move(names), std::move(m));
}

ATPoset at_finite(const FinitePoset& p) {
  const std::size_t n = p.size();
  if (n == 0) fail(ErrorCode::MalformedInput, "the completion needs a nonempty poset");
  if (n > kAtFiniteMax) {
    fail(ErrorCode::TooLarge, "exhaustive subset scan is limited to " + std::to_string(kAtFiniteMax) + " elements");
  }
  std::vector<std::uint32_t> up(n, 0), down(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.leq(i, j)) {
        up[i] |= 1U << j;
        down[j] |= 1U << i;
      }

  std::vector<std::uint32_t> classes;
  std::uint64_t scanned = 0, eligible = 0;
  const std::uint32_t total = n == 32 ? UINT32_MAX : (1U << n) - 1;
  for (std::uint32_t s = 1; s != 0 && s <= total; ++s) {
    ++scanned;
    bool least = false;
    for (std::size_t i = 0; i < n && !least; ++i) least = (s >> i & 1U) && (s & ~up[i]) == 0;
    if (least) continue;
    bool directed = true;
    for (std::size_t i = 0; i < n && directed; ++i) {
      if (!(s >> i & 1U)) continue;
      for (std::size_t j = i + 1; j < n && directed; ++j)
        if (s >> j & 1U) directed = (s & down[i] & down[j]) != 0;
    }
    if (!directed) continue;
    ++eligible;
    bool known = false;
    for (std::uint32_t c : classes)
      known = known || (subset_preceq_mask(c, s, p) && subset_preceq_mask(s, c, p));
    if (!known) classes.push_back(s);
  }

  std::vector<ATElement> elements;
  for (const auto& label : p.elements()) elements.push_back({true, label});
  for (std::uint32_t c : classes) {
    std::string key = "{";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i)
      if (c >> i & 1U) {
        key += (first ? "" : ",") + p.at(i);
        first = false;
      }
    elements.push_back({false, key + "}"});
  }

  const std::size_t m = elements.size();
  std::vector<bool> leq(m * m, false);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      bool oi = i < n, oj = j < n;
      std::uint32_t si = oi ? 0 : classes[i - n], sj = oj ? 0 : classes[j - n];
      if (oi && oj) leq[i * m + j] = p.leq(i, j);
      else if (oi) leq[i * m + j] = (sj & ~up[i]) == 0;
      else if (oj) leq[i * m + j] = (si & down[j]) != 0;
      else leq[i * m + j] = subset_preceq_mask(si, sj, p);
    }
  ATPoset out(std::move(elements), std::move(leq), "exact", "exact");
  out.scanned = scanned;
  out.eligible = eligible;
  return out;
}

std::vector<Rational> default_fd_probes(const SymbolicChain& c) {
  require_fd_carrier(c);
  switch (c.kind()) {
    case ChainKind::Rats: return {Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(2)};
    case ChainKind::Ints: return {Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2)};
    default: return {Rational(0), Rational(1), Rational(2), Rational(3), Rational(4)};
  }
}

namespace {

// Position key for the keyed comparator: bottom first, then q, then the cut
// just above q.
struct FdKey {
  std::optional<Rational> coord;
  int tier = 0;

  friend bool operator<=(const FdKey& a, const FdKey& b) {
    if (!a.coord || !b.coord) return !a.coord;
    if (*a.coord != *b.coord) return *a.coord < *b.coord;
    return a.tier <= b.tier;
  }
};

FdKey fd_key(const SymbolicChain& c, const ATElement& e) {
  if (e.original) return {order::coordinate(c, Rational::parse(e.label)), 0};
  if (e.label == "-inf") return {std::nullopt, 0};
  return {Rational::parse(e.label), 1};
}

}  // namespace

ATPoset at_fd(const SymbolicChain& c, const std::vector<Rational>& probes) {
  require_fd_carrier(c);
  std::vector<Rational> values;
  for (const auto& q : probes) {
    if (!order::contains(c, order::ChainPoint{0, q})) {
      fail(ErrorCode::MalformedInput, "probe " + q.to_string() + " is not an element of " + c.to_string());
    }
    values.push_back(q);
  }
  std::sort(values.begin(), values.end(), [&](const Rational& a, const Rational& b) {
    return order::coordinate(c, a) < order::coordinate(c, b);
  });
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<ATElement> elements;
  for (const auto& q : values) elements.push_back({true, q.to_string()});
  if (c.kind() == ChainKind::Rats) {
    for (const auto& q : values) elements.push_back({false, ClassKey{q, false}.to_string()});
  }
  if (c.kind() != ChainKind::Omega) elements.push_back({false, ClassKey{}.to_string()});

  std::stable_sort(elements.begin(), elements.end(), [&](const ATElement& a, const ATElement& b) {
    return !(fd_key(c, b) <= fd_key(c, a));
  });
  const std::size_t m = elements.size();
  std::vector<bool> leq(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) leq[i * m + j] = fd_key(c, elements[i]) <= fd_key(c, elements[j]);
  return ATPoset(std::move(elements), std::move(leq), "finDesc", "symbolic");
}

ATPoset at_fd(const SymbolicChain& c) { return at_fd(c, default_fd_probes(c)); }

FinDescSubset representative(const SymbolicChain& c, const ATElement& e) {
  if (e.original) return FinDescSubset::singleton(c, Rational::parse(e.label));
  if (e.label == "-inf") return FinDescSubset::whole(c);
  return FinDescSubset(c, {Piece{Rational::parse(e.label), false, std::nullopt, false}});
}

bool at_rules_leq(const SymbolicChain& c, const ATElement& a, const ATElement& b) {
  // With originals read as singletons, each of the four rules is an instance
  // of the subset preorder.
  return subset_preceq(representative(c, a), representative(c, b));
}

namespace {

SpectrumOrder label_primes(ATPoset at) {
  SpectrumOrder out{std::move(at), {}, false};
  for (const auto& e : out.at.elements()) out.primes.push_back("P[" + e.name() + "]");
  out.linear = out.at.is_total();
  return out;
}

}  // namespace

SpectrumOrder spectrum_order(const FinitePoset& p) {
  auto out = label_primes(at_finite(p));
  if (p.is_chain() && !out.linear) fail(ErrorCode::MalformedInput, "completion of a chain is not linear");
  return out;
}

SpectrumOrder spectrum_order(const SymbolicChain& c) {
  auto out = label_primes(at_fd(c));
  if (!out.linear) fail(ErrorCode::MalformedInput, "completion of a chain is not linear");
  return out;
}

DenseInjection dense_cor_injection(const ATPoset& fragment) {
  const SymbolicChain rats = SymbolicChain::rats();
  DenseInjection out;
  std::vector<std::size_t> cuts;
  std::vector<FinDescSubset> images;
  for (std::size_t i = 0; i < fragment.size(); ++i) {
    const auto& e = fragment.elements()[i];
    if (e.original) continue;
    // S_r = {p in Q : r < p}: everything above q for the successor cut at q,
    // all of Q for the bottom.
    FinDescSubset s = representative(rats, e);
    cuts.push_back(i);
    out.mapping.emplace_back(e.name(), s.class_key().to_string());
    images.push_back(std::move(s));
  }
  std::set<std::string> keys;
  for (const auto& [from, to] : out.mapping) keys.insert(to);
  out.injective = keys.size() == out.mapping.size();
  out.preserving = out.reflecting = true;
  for (std::size_t a = 0; a < cuts.size(); ++a)
    for (std::size_t b = 0; b < cuts.size(); ++b) {
      bool source = fragment.leq(cuts[a], cuts[b]);
      bool target = subset_preceq(images[a], images[b]);
      if (source && !target) out.preserving = false;
      if (target && !source) out.reflecting = false;
    }
  return out;
}

namespace {

FinitePoset disjoint_chains(const std::vector<std::size_t>& lengths) {
  std::set<std::size_t> distinct(lengths.begin(), lengths.end());
  if (distinct.empty()) fail(ErrorCode::MalformedInput, "need at least one chain length");
  if (distinct.count(0)) fail(ErrorCode::MalformedInput, "chain lengths must be positive");
  std::vector<Label> labels;
  std::vector<std::pair<Label, Label>> pairs;
  for (std::size_t len : distinct) {
    auto name = [len](std::size_t i) { return "c" + std::to_string(len) + "_" + std::to_string(i); };
    for (std::size_t i = 0; i < len; ++i) {
      labels.push_back(name(i));
      for (std::size_t j = i; j < len; ++j) pairs.emplace_back(name(i), name(j));
    }
  }
  return FinitePoset(labels, pairs);
}

}  // namespace

BerryFinite berry_family(const std::vector<std::size_t>& lengths) {
  FinitePoset poset = disjoint_chains(lengths);
  auto at = at_finite(poset);
  BerryFinite out{poset, std::move(at), *std::max_element(lengths.begin(), lengths.end()), true, false};
  out.isomorphic = order::order_iso(out.poset, out.at.as_poset()).has_value();
  return out;
}

FinitePoset parse_poset(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) fail(ErrorCode::Parse, "poset must look like chain:n, antichain:n or chains:a,b");
  std::string_view kind = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  auto number = [&](std::string_view digits) {
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      fail(ErrorCode::Parse, "bad size in '" + std::string(text) + "'");
    }
    return n;
  };
  if (kind == "chain" || kind == "antichain") {
    std::size_t n = number(rest);
    if (n == 0) fail(ErrorCode::MalformedInput, "posets must be nonempty");
    return kind == "chain" ? FinitePoset::chain(n) : FinitePoset::antichain(n);
  }
  if (kind == "chains") {
    std::vector<std::size_t> lengths;
    while (!rest.empty()) {
      auto comma = rest.find(',');
      lengths.push_back(number(rest.substr(0, comma)));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    return disjoint_chains(lengths);
  }
  fail(ErrorCode::Parse, "unknown poset kind '" + std::string(kind) + "'");
}

}  // namespace krullkit::lpa
