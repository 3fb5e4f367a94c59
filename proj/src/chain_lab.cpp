#include "krullkit/chain_lab.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "krullkit/error.hpp"

namespace krullkit::chains {

namespace {

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

}  // namespace

// ---------------------------------------------------------------------------
// SubsetChain

SubsetChain::SubsetChain(std::vector<Label> ground, const std::vector<std::vector<Label>>& links)
    : ground_(std::move(ground)) {
  if (ground_.size() > kMaxGround) {
    fail(ErrorCode::TooLarge, "ground sets are limited to " + std::to_string(kMaxGround) + " elements");
  }
  for (const auto& link : links) {
    Mask m = 0;
    for (const auto& label : link) {
      Mask bit = Mask{1} << index_of(label);
      if (m & bit) fail(ErrorCode::MalformedInput, "label '" + label + "' repeated inside a link");
      m |= bit;
    }
    links_.push_back(m);
  }
  validate();
}

SubsetChain SubsetChain::from_masks(std::vector<Label> ground, std::vector<Mask> links) {
  if (ground.size() > kMaxGround) {
    fail(ErrorCode::TooLarge, "ground sets are limited to " + std::to_string(kMaxGround) + " elements");
  }
  SubsetChain out;
  out.ground_ = std::move(ground);
  out.links_ = std::move(links);
  out.validate();
  return out;
}

void SubsetChain::validate() {
  std::set<Label> seen(ground_.begin(), ground_.end());
  if (seen.size() != ground_.size()) fail(ErrorCode::MalformedInput, "ground labels must be distinct");
  Mask all = ground_.size() == 64 ? ~Mask{0} : (Mask{1} << ground_.size()) - 1;
  for (Mask m : links_)
    if (!subset(m, all)) fail(ErrorCode::MalformedInput, "link outside the ground set");
  std::stable_sort(links_.begin(), links_.end(),
                   [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  for (std::size_t i = 1; i < links_.size(); ++i) {
    if (links_[i - 1] == links_[i]) fail(ErrorCode::MalformedInput, "links must be distinct");
    if (!subset(links_[i - 1], links_[i])) {
      fail(ErrorCode::MalformedInput, "links " + link_to_string(links_[i - 1]) + " and " +
                                          link_to_string(links_[i]) + " are incomparable");
    }
  }
}

std::size_t SubsetChain::index_of(const Label& label) const {
  auto it = std::find(ground_.begin(), ground_.end(), label);
  if (it == ground_.end()) fail(ErrorCode::MalformedInput, "label '" + label + "' is not in the ground set");
  return static_cast<std::size_t>(it - ground_.begin());
}

std::vector<Label> SubsetChain::labels(Mask m) const {
  std::vector<Label> out;
  for (std::size_t i = 0; i < ground_.size(); ++i)
    if (m >> i & 1U) out.push_back(ground_[i]);
  return out;
}

std::string SubsetChain::link_to_string(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (const auto& label : labels(m)) {
    if (!first) out += ",";
    first = false;
    out += label;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// COrder

COrder::COrder(const SubsetChain& chain) : n_(chain.ground().size()), rel_(n_ * n_, false) {
  for (Mask a : chain.links())
    for (std::size_t x = 0; x < n_; ++x)
      if (a >> x & 1U)
        for (std::size_t y = 0; y < n_; ++y)
          if (!(a >> y & 1U)) rel_[x * n_ + y] = true;
}

std::vector<std::pair<std::size_t, std::size_t>> COrder::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      if (less(x, y)) out.emplace_back(x, y);
  return out;
}

bool COrder::irreflexive() const {
  for (std::size_t x = 0; x < n_; ++x)
    if (less(x, x)) return false;
  return true;
}

bool COrder::transitive() const {
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      if (less(x, y))
        for (std::size_t z = 0; z < n_; ++z)
          if (less(y, z) && !less(x, z)) return false;
  return true;
}

COrder c_order(const SubsetChain& chain) { return COrder(chain); }

// ---------------------------------------------------------------------------
// Separated sets

namespace {

bool distinguished(const SubsetChain& chain, std::size_t x, std::size_t y) {
  for (Mask a : chain.links())
    if ((a >> x & 1U) != (a >> y & 1U)) return true;
  return false;
}

}  // namespace

SeparatedSet max_separated(const SubsetChain& chain, const std::vector<Label>& hint) {
  const std::size_t n = chain.ground().size();
  std::vector<std::size_t> order;
  if (hint.empty()) {
    for (std::size_t i = 0; i < n; ++i) order.push_back(i);
  } else {
    for (const auto& label : hint) order.push_back(chain.index_of(label));
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() != n || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail(ErrorCode::MalformedInput, "hint must list every ground element exactly once");
    }
  }

  std::vector<std::size_t> chosen;
  for (std::size_t x : order) {
    bool ok = true;
    for (std::size_t y : chosen) ok = ok && distinguished(chain, x, y);
    if (ok) chosen.push_back(x);
  }

  COrder prec(chain);
  SeparatedSet out;
  out.separated = true;
  for (std::size_t i = 0; i < chosen.size(); ++i)
    for (std::size_t j = i + 1; j < chosen.size(); ++j)
      out.separated = out.separated && distinguished(chain, chosen[i], chosen[j]);
  out.maximal = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (std::find(chosen.begin(), chosen.end(), x) != chosen.end()) continue;
    bool addable = true;
    for (std::size_t y : chosen) addable = addable && distinguished(chain, x, y);
    if (addable) out.maximal = false;
  }
  out.total = true;
  for (std::size_t x : chosen)
    for (std::size_t y : chosen)
      if (x != y && !prec.less(x, y) && !prec.less(y, x)) out.total = false;

  // Sort by the C-order; membership count in links is a monotone key for it.
  auto depth = [&](std::size_t x) {
    std::size_t k = 0;
    for (Mask a : chain.links()) k += a >> x & 1U;
    return k;
  };
  std::stable_sort(chosen.begin(), chosen.end(),
                   [&](std::size_t x, std::size_t y) { return depth(x) > depth(y); });

  std::vector<Mask> restricted;
  for (Mask a : chain.links()) {
    Mask r = 0;
    for (std::size_t i = 0; i < chosen.size(); ++i)
      if (a >> chosen[i] & 1U) r |= Mask{1} << i;
    restricted.push_back(r);
  }
  std::vector<Mask> distinct = restricted;
  std::sort(distinct.begin(), distinct.end());
  out.injective = std::adjacent_find(distinct.begin(), distinct.end()) == distinct.end();

  for (std::size_t x : chosen) out.members.push_back(chain.ground()[x]);
  if (out.injective) {
    out.restricted = SubsetChain::from_masks(out.members, restricted);
  } else {
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    out.restricted = SubsetChain::from_masks(out.members, distinct);
  }
  return out;
}

DenseToChain dense_to_chain(const order::FiniteLinOrder& b, const std::vector<Label>& d) {
  std::set<Label> dset(d.begin(), d.end());
  for (const auto& x : dset)
    if (!b.contains(x)) fail(ErrorCode::MalformedInput, "'" + x + "' is not an element of b");
  std::vector<Label> ground;
  for (const auto& x : b.elements())
    if (dset.count(x)) ground.push_back(x);
  if (ground.size() > kMaxGround) fail(ErrorCode::TooLarge, "dense set above 64 elements");

  DenseToChain out;
  std::vector<Mask> links;
  Mask current = 0;
  std::size_t next = 0;
  for (const auto& s : b.elements()) {
    if (next < ground.size() && ground[next] == s) current |= Mask{1} << next++;
    if (!links.empty() && links.back() == current) {
      out.collapsed.push_back(s);
    } else {
      links.push_back(current);
    }
  }
  out.chain = SubsetChain::from_masks(std::move(ground), std::move(links));
  return out;
}

// ---------------------------------------------------------------------------
// Cuts

std::size_t PreparedChain::member_index(const Label& label) const {
  const auto& m = separated.members;
  auto it = std::find(m.begin(), m.end(), label);
  if (it == m.end()) fail(ErrorCode::MalformedInput, "'" + label + "' is not in the separated set");
  return static_cast<std::size_t>(it - m.begin());
}

std::shared_ptr<const PreparedChain> prepare(const SubsetChain& chain, const std::vector<Label>& hint) {
  auto p = std::make_shared<PreparedChain>();
  p->chain = chain;
  p->separated = max_separated(chain, hint);
  for (Mask r : p->separated.restricted.links()) {
    std::size_t k = static_cast<std::size_t>(std::popcount(r));
    // Restricted links are down-sets of the C-order, hence prefixes.
    if (r != (k == 64 ? ~Mask{0} : (Mask{1} << k) - 1)) {
      fail(ErrorCode::MalformedInput, "restricted link is not a prefix of the separated set");
    }
    p->prefix.push_back(k);
  }
  if (p->prefix.size() != chain.size()) {
    fail(ErrorCode::MalformedInput, "restriction to the separated set is not injective");
  }
  return p;
}

Cut Cut::columns(std::shared_ptr<const PreparedChain> p, std::size_t link) {
  if (link >= p->prefix.size()) fail(ErrorCode::MalformedInput, "link index out of range");
  Cut c;
  c.prepared = std::move(p);
  c.kind = CutKind::FullColumns;
  c.link = link;
  return c;
}

Cut Cut::seg(std::shared_ptr<const PreparedChain> p, std::size_t member, Rational q) {
  if (member >= p->separated.members.size()) fail(ErrorCode::MalformedInput, "member index out of range");
  Cut c;
  c.prepared = std::move(p);
  c.kind = CutKind::Seg;
  c.member = member;
  c.q = q;
  return c;
}

std::string Cut::to_string() const {
  if (kind == CutKind::FullColumns) {
    return "cols(" + prepared->chain.link_to_string(prepared->chain.links()[link]) + ")";
  }
  return "seg(" + prepared->separated.members[member] + ", " + q.to_string() + ")";
}

const char* to_string(CutRelation r) {
  switch (r) {
    case CutRelation::Subset: return "subset";
    case CutRelation::Equal: return "equal";
    case CutRelation::Superset: return "superset";
  }
  return "?";
}

namespace {

CutRelation from_ordering(std::strong_ordering o) {
  if (o < 0) return CutRelation::Subset;
  if (o > 0) return CutRelation::Superset;
  return CutRelation::Equal;
}

CutRelation flip(CutRelation r) {
  if (r == CutRelation::Subset) return CutRelation::Superset;
  if (r == CutRelation::Superset) return CutRelation::Subset;
  return r;
}

}  // namespace

CutRelation cut_cmp(const Cut& a, const Cut& b) {
  if (a.prepared != b.prepared && !(*a.prepared == *b.prepared)) {
    fail(ErrorCode::IncompatibleCuts, "cuts belong to different chain preparations");
  }
  const auto& p = *a.prepared;
  if (a.kind == CutKind::FullColumns && b.kind == CutKind::FullColumns) {
    return from_ordering(p.prefix[a.link] <=> p.prefix[b.link]);
  }
  if (a.kind == CutKind::Seg && b.kind == CutKind::Seg) {
    if (a.member != b.member) return from_ordering(a.member <=> b.member);
    return from_ordering(a.q <=> b.q);
  }
  if (a.kind == CutKind::Seg) {
    return a.member < p.prefix[b.link] ? CutRelation::Subset : CutRelation::Superset;
  }
  return flip(cut_cmp(b, a));
}

std::optional<Cut> betweenness_witness(const Cut& a, const Cut& b) {
  CutRelation r = cut_cmp(a, b);
  if (r == CutRelation::Equal) return std::nullopt;
  if (r == CutRelation::Superset) return betweenness_witness(b, a);
  const auto& p = a.prepared;
  if (a.kind == CutKind::Seg) {
    if (b.kind == CutKind::Seg && b.member == a.member) return Cut::seg(p, a.member, midpoint(a.q, b.q));
    return Cut::seg(p, a.member, a.q + 1);
  }
  if (b.kind == CutKind::Seg) return Cut::seg(p, b.member, b.q - 1);
  // The first member outside a's columns lies inside b's.
  return Cut::seg(p, p->prefix[a.link], 0);
}

bool membership_oracle(const Cut& cut, const Label& s, const Rational& q) {
  const auto& p = *cut.prepared;
  std::size_t x = p.chain.index_of(s);
  if (cut.kind == CutKind::FullColumns) return p.chain.links()[cut.link] >> x & 1U;
  std::size_t a = p.chain.index_of(p.separated.members[cut.member]);
  if (x == a) return q < cut.q;
  return COrder(p.chain).less(x, a);
}

std::vector<Rational> default_probes() { return {Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(2)}; }

DenseConstruction chain_to_dense(const SubsetChain& chain, const std::vector<Rational>& probes,
                                 const std::vector<Label>& hint) {
  DenseConstruction out;
  out.prepared = prepare(chain, hint);
  for (std::size_t i = 0; i < chain.size(); ++i) out.cuts.push_back(Cut::columns(out.prepared, i));
  std::set<Rational> qs(probes.begin(), probes.end());
  for (std::size_t m = 0; m < out.prepared->separated.members.size(); ++m)
    for (const auto& q : qs) out.cuts.push_back(Cut::seg(out.prepared, m, q));
  std::stable_sort(out.cuts.begin(), out.cuts.end(), [](const Cut& a, const Cut& b) {
    return cut_cmp(a, b) == CutRelation::Subset;
  });
  for (std::size_t i = 0; i + 1 < out.cuts.size(); ++i) {
    out.witnesses.push_back(*betweenness_witness(out.cuts[i], out.cuts[i + 1]));
  }
  return out;
}

std::size_t DenseConstruction::column_count() const {
  return static_cast<std::size_t>(std::count_if(
      cuts.begin(), cuts.end(), [](const Cut& c) { return c.kind == CutKind::FullColumns; }));
}

std::size_t DenseConstruction::round_trip_links() const {
  std::vector<Label> labels, dense;
  for (const auto& c : cuts) {
    labels.push_back(c.to_string());
    if (c.kind == CutKind::Seg) dense.push_back(c.to_string());
  }
  order::FiniteLinOrder b(labels);
  auto back = dense_to_chain(b, dense);
  // Down-sets at the column cuts, read off the collapsed chain.
  std::set<Mask> at_columns;
  Mask current = 0;
  std::size_t next = 0;
  const auto& ground = back.chain.ground();
  for (const auto& c : cuts) {
    if (c.kind == CutKind::Seg) {
      while (next < ground.size() && ground[next] != c.to_string()) ++next;
      current |= Mask{1} << next++;
    } else {
      at_columns.insert(current);
    }
  }
  return at_columns.size();
}

// ---------------------------------------------------------------------------
// Finite ded

DedFinite ded_finite(std::size_t n, bool witness_only) {
  if (n >= kMaxGround) fail(ErrorCode::TooLarge, "ground sets are limited to 63 elements here");
  if (n > kDedExhaustiveMax && !witness_only) {
    fail(ErrorCode::TooLarge, "exhaustive ded is limited to n <= " + std::to_string(kDedExhaustiveMax) +
                                  "; use witness-only mode");
  }
  DedFinite out;
  out.n = n;
  std::vector<Label> ground;
  std::vector<Mask> links{0};
  for (std::size_t i = 0; i < n; ++i) {
    ground.push_back(std::to_string(i));
    links.push_back(links.back() | Mask{1} << i);
  }
  out.witness = SubsetChain::from_masks(std::move(ground), std::move(links));
  out.links = out.witness.size();

  if (!witness_only) {
    // longest[m] = longest chain of subsets ending at m.
    const std::size_t total = std::size_t{1} << n;
    std::vector<std::size_t> longest(total, 1);
    std::size_t best = 0;
    for (std::size_t m = 0; m < total; ++m) {
      for (std::size_t s = m; s != 0;) {
        s = (s - 1) & m;
        longest[m] = std::max(longest[m], longest[s] + 1);
      }
      best = std::max(best, longest[m]);
    }
    out.links = best;
    out.exhaustive = true;
  }
  return out;
}

}  // namespace krullkit::chains
