#include "krullkit/lex_groups.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <random>

#include "krullkit/error.hpp"

namespace krullkit::lex {

// ---------------------------------------------------------------------------
// LexGroup

LexGroup::LexGroup(order::FiniteLinOrder index, Significance significance)
    : index_(std::move(index)), significance_(significance) {
  if (index_.empty()) fail(ErrorCode::MalformedInput, "a lexicographic sum needs a nonempty index");
}

LexGroup LexGroup::zlex(std::size_t n) {
  return LexGroup(order::FiniteLinOrder::fin(n), Significance::LeastIndex);
}

std::vector<std::size_t> LexGroup::significance_order() const {
  std::vector<std::size_t> out(index_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = significance_ == Significance::LeastIndex ? i : out.size() - 1 - i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(std::map<Label, std::int64_t> coords) {
  for (auto& [label, value] : coords)
    if (value != 0) coords_.emplace(label, value);
}

GroupElement GroupElement::from_coords(const LexGroup& group, std::span<const std::int64_t> coords) {
  if (coords.size() != group.dimension()) {
    fail(ErrorCode::MalformedInput, "expected " + std::to_string(group.dimension()) + " coordinates");
  }
  std::map<Label, std::int64_t> m;
  for (std::size_t i = 0; i < coords.size(); ++i) m[group.index().at(i)] = coords[i];
  return GroupElement(std::move(m));
}

GroupElement GroupElement::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    fail(ErrorCode::Parse, "group element must look like {label:value,...}");
  }
  text = trim(text.substr(1, text.size() - 2));
  std::map<Label, std::int64_t> coords;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    auto colon = item.rfind(':');
    if (colon == std::string_view::npos) fail(ErrorCode::Parse, "missing ':' in '" + std::string(item) + "'");
    std::string label(trim(item.substr(0, colon)));
    std::string_view digits = trim(item.substr(colon + 1));
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || label.empty()) {
      fail(ErrorCode::Parse, "bad coordinate '" + std::string(item) + "'");
    }
    if (!coords.emplace(label, value).second) fail(ErrorCode::Parse, "repeated label " + label);
  }
  return GroupElement(std::move(coords));
}

std::int64_t GroupElement::operator[](const Label& label) const {
  auto it = coords_.find(label);
  return it == coords_.end() ? 0 : it->second;
}

std::vector<Label> GroupElement::support() const {
  std::vector<Label> out;
  for (const auto& [label, value] : coords_) out.push_back(label);
  return out;
}

GroupElement GroupElement::operator-() const {
  GroupElement out;
  for (const auto& [label, value] : coords_) out.coords_.emplace(label, -value);
  return out;
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  std::map<Label, std::int64_t> m = a.coords_;
  for (const auto& [label, value] : b.coords_) m[label] += value;
  return GroupElement(std::move(m));
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) { return a + (-b); }

std::string GroupElement::to_string(const LexGroup& group) const {
  std::string out = "{";
  bool first = true;
  for (const auto& label : group.index().elements()) {
    auto it = coords_.find(label);
    if (it == coords_.end()) continue;
    if (!first) out += ",";
    first = false;
    out += label + ":" + std::to_string(it->second);
  }
  return out + "}";
}

void check_element(const LexGroup& group, const GroupElement& f) {
  for (const auto& [label, value] : f.entries()) {
    if (!group.index().contains(label)) {
      fail(ErrorCode::MalformedInput, "coordinate '" + label + "' is outside the index");
    }
  }
}

// ---------------------------------------------------------------------------
// Order

std::strong_ordering cmp(const LexGroup& group, const GroupElement& a, const GroupElement& b) {
  check_element(group, a);
  check_element(group, b);
  for (std::size_t pos : group.significance_order()) {
    const Label& label = group.index().at(pos);
    std::int64_t x = a[label], y = b[label];
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

bool in_positive_cone(const LexGroup& group, const GroupElement& f) {
  return cmp(group, GroupElement{}, f) == std::strong_ordering::less;
}

GroupElement abs(const LexGroup& group, const GroupElement& f) {
  return cmp(group, f, GroupElement{}) == std::strong_ordering::less ? -f : f;
}

// ---------------------------------------------------------------------------
// IsolatedSubgroup

IsolatedSubgroup::IsolatedSubgroup(LexGroup group, std::set<Label> segment)
    : group_(std::move(group)), segment_(std::move(segment)) {
  for (const auto& label : segment_) {
    if (!group_.index().contains(label)) {
      fail(ErrorCode::MalformedSegment, "segment label '" + label + "' is outside the index");
    }
  }
}

bool IsolatedSubgroup::well_formed() const {
  // Scanning from the least significant end, membership may only switch off.
  bool inside = true;
  auto order = group_.significance_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    bool member = segment_.count(group_.index().at(*it)) > 0;
    if (member && !inside) return false;
    inside = member;
  }
  return true;
}

bool IsolatedSubgroup::contains(const GroupElement& f) const {
  for (const auto& [label, value] : f.entries())
    if (!segment_.count(label)) return false;
  return true;
}

bool IsolatedSubgroup::subset_of(const IsolatedSubgroup& other) const {
  return std::includes(other.segment_.begin(), other.segment_.end(), segment_.begin(),
                       segment_.end());
}

std::string IsolatedSubgroup::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& label : group_.index().elements()) {
    if (!segment_.count(label)) continue;
    if (!first) out += ",";
    first = false;
    out += label;
  }
  return out + "}";
}

IsolationSample is_isolated_sample(const IsolatedSubgroup& subgroup, std::size_t trials,
                                   std::int64_t bound, std::uint64_t seed) {
  if (!subgroup.well_formed()) {
    fail(ErrorCode::MalformedSegment,
         "segment " + subgroup.to_string() + " is not closed toward the less significant end");
  }
  const LexGroup& g = subgroup.group();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
  std::bernoulli_distribution keep(0.5);

  IsolationSample result;
  for (std::size_t t = 0; t < trials; ++t) {
    std::map<Label, std::int64_t> hc, xc;
    for (const auto& label : subgroup.segment()) hc[label] = coord(rng);
    for (const auto& label : g.index().elements())
      if (keep(rng)) xc[label] = coord(rng);
    GroupElement h(std::move(hc)), x(std::move(xc));
    ++result.trials;
    if (cmp(g, abs(g, x), abs(g, h)) != std::strong_ordering::greater && !subgroup.contains(x)) {
      result.passed = false;
      result.counterexample = std::pair{h, x};
      break;
    }
  }
  return result;
}

IsolatedSubgroup isolated_hull(const LexGroup& group, const GroupElement& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroElement, "the zero element has no isolated hull");
  check_element(group, f);
  std::size_t lo = group.dimension(), hi = 0;
  for (const auto& label : f.support()) {
    std::size_t p = group.index().position(label);
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  std::set<Label> segment;
  for (std::size_t p = 0; p < group.dimension(); ++p) {
    bool member = group.significance() == Significance::LeastIndex ? p >= lo : p <= hi;
    if (member) segment.insert(group.index().at(p));
  }
  return IsolatedSubgroup(group, std::move(segment));
}

std::vector<IsolatedSubgroup> segment_subgroups(const LexGroup& group) {
  std::vector<IsolatedSubgroup> out;
  auto order = group.significance_order();
  std::set<Label> segment;
  out.emplace_back(group, segment);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    segment.insert(group.index().at(*it));
    out.emplace_back(group, segment);
  }
  return out;
}

order::FiniteLinOrder rank(const LexGroup& group) {
  std::vector<Label> labels;
  for (const auto& h : segment_subgroups(group))
    if (!h.is_trivial()) labels.push_back(h.to_string());
  return order::FiniteLinOrder(std::move(labels));
}

// ---------------------------------------------------------------------------
// Concatenation

namespace {

std::string summand_prefix(std::size_t i) { return std::to_string(i) + ":"; }

}  // namespace

GroupElement project_first_factor(const LexGroup& sum, const LexGroup& first,
                                  const GroupElement& f) {
  check_element(sum, f);
  const std::string prefix = summand_prefix(0);
  std::map<Label, std::int64_t> coords;
  for (const auto& [label, value] : f.entries()) {
    if (label.rfind(prefix, 0) != 0) continue;
    Label inner = label.substr(prefix.size());
    if (!first.index().contains(inner)) {
      fail(ErrorCode::MalformedInput, "label '" + label + "' does not belong to the first summand");
    }
    coords.emplace(std::move(inner), value);
  }
  return GroupElement(std::move(coords));
}

ConcatenationReport check_concatenation_theorem(std::span<const LexGroup> groups,
                                                std::uint64_t seed, std::size_t trials) {
  if (groups.empty()) fail(ErrorCode::MalformedInput, "need at least one summand");
  std::vector<order::FiniteLinOrder> indices;
  for (const auto& g : groups) {
    if (g.significance() != Significance::LeastIndex) {
      fail(ErrorCode::MalformedInput, "concatenation check needs lexicographic summands");
    }
    indices.push_back(g.index());
  }
  LexGroup sum(order::concat(indices), Significance::LeastIndex);
  const std::size_t m = groups.size();

  std::vector<order::FiniteLinOrder> ranks;
  for (const auto& g : groups) ranks.push_back(rank(g));
  std::vector<order::FiniteLinOrder> reversed(ranks.rbegin(), ranks.rend());

  ConcatenationReport report{sum, rank(sum), order::concat(reversed), std::nullopt};

  // A nontrivial segment of the sum starts inside exactly one summand i; it
  // is that summand's segment followed by every later summand in full.
  order::OrderMap witness;
  for (const auto& h : segment_subgroups(sum)) {
    if (h.is_trivial()) continue;
    std::size_t least = sum.dimension();
    for (const auto& label : h.segment()) least = std::min(least, sum.index().position(label));
    const Label& head = sum.index().at(least);
    std::size_t i = std::stoul(head.substr(0, head.find(':')));
    std::set<Label> local;
    for (const auto& label : h.segment()) {
      if (label.rfind(summand_prefix(i), 0) == 0) local.insert(label.substr(summand_prefix(i).size()));
    }
    IsolatedSubgroup local_h(groups[i], local);
    witness.mapping.emplace(h.to_string(), summand_prefix(m - 1 - i) + local_h.to_string());
  }

  auto lhs = order::FinitePoset::from_lin_order(report.lhs);
  auto rhs = order::FinitePoset::from_lin_order(report.rhs);
  bool total = witness.mapping.size() == report.lhs.size();
  for (const auto& [from, to] : witness.mapping) total = total && report.rhs.contains(to);
  if (total) {
    report.bijective = order::is_bijective(witness, lhs, rhs);
    report.preserving = order::is_order_preserving(witness, lhs, rhs);
    report.reflecting = order::is_order_reflecting(witness, lhs, rhs);
    report.witness = std::move(witness);
  }

  // The projection onto the first summand must be monotone for it to induce a
  // valuation with value group G_0.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-2, 2);
  std::vector<std::int64_t> a(sum.dimension()), b(sum.dimension());
  report.projection_monotone = true;
  for (std::size_t t = 0; t < trials && report.projection_monotone; ++t) {
    for (auto& v : a) v = coord(rng);
    for (auto& v : b) v = coord(rng);
    auto f = GroupElement::from_coords(sum, a), g = GroupElement::from_coords(sum, b);
    if (cmp(sum, f, g) == std::strong_ordering::greater) std::swap(f, g);
    auto pf = project_first_factor(sum, groups[0], f);
    auto pg = project_first_factor(sum, groups[0], g);
    report.projection_monotone = cmp(groups[0], pf, pg) != std::strong_ordering::greater;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Tree group

bool tree_less(const std::string& a, const std::string& b) { return a < b; }

namespace {

std::string word_label(const std::string& w) { return w.empty() ? std::string(kEmptyWord) : w; }

std::vector<std::string> words_of_length(std::size_t len) {
  std::vector<std::string> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
    std::string w(len, '0');
    for (std::size_t i = 0; i < len; ++i)
      if (bits >> (len - 1 - i) & 1U) w[i] = '1';
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<std::string> tree_words(std::size_t depth) {
  std::vector<std::string> words;
  for (std::size_t len = 0; len < depth; ++len) {
    auto layer = words_of_length(len);
    words.insert(words.end(), layer.begin(), layer.end());
  }
  std::sort(words.begin(), words.end(), tree_less);
  return words;
}

}  // namespace

order::FiniteLinOrder tree_index(std::size_t depth) {
  std::vector<Label> labels;
  for (const auto& w : tree_words(depth)) labels.push_back(word_label(w));
  return order::FiniteLinOrder(std::move(labels));
}

TreeGroup tree_group(std::size_t n) {
  if (n == 0) fail(ErrorCode::MalformedInput, "tree depth must be at least 1");
  if (n > 16) fail(ErrorCode::TooLarge, "tree depth above 16");
  TreeGroup out{n, LexGroup(tree_index(n), Significance::GreatestIndex), {}};
  const auto carrier = tree_words(n);
  for (const auto& leaf : words_of_length(n)) {
    std::set<Label> segment;
    for (const auto& w : carrier)
      if (tree_less(w, leaf)) segment.insert(word_label(w));
    out.leaves.emplace_back(leaf, IsolatedSubgroup(out.group, std::move(segment)));
  }
  return out;
}

std::size_t TreeGroup::distinct_segments() const {
  std::set<std::set<Label>> seen;
  for (const auto& [leaf, h] : leaves) seen.insert(h.segment());
  return seen.size();
}

bool TreeGroup::monotone() const {
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j)
      if (!leaves[i].second.subset_of(leaves[j].second)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Spectrum

ValuationSpectrum valuation_spectrum(const LexGroup& group) {
  auto subgroups = segment_subgroups(group);
  std::reverse(subgroups.begin(), subgroups.end());
  std::vector<Label> labels;
  for (std::size_t i = 0; i < subgroups.size(); ++i) labels.push_back("P" + std::to_string(i));
  return ValuationSpectrum{order::FiniteLinOrder(std::move(labels)), std::move(subgroups)};
}

std::string ValuationSpectrum::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) out += " ⊂ ";
    out += primes.at(i);
  }
  return out;
}

LexGroup parse_group(std::string_view text) {
  auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    fail(ErrorCode::Parse, "group must look like zlex(n), zrevlex(n) or ztree(n)");
  }
  std::string_view name = text.substr(0, open);
  std::string_view digits = text.substr(open + 1, text.size() - open - 2);
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    fail(ErrorCode::Parse, "bad group size in '" + std::string(text) + "'");
  }
  if (name == "zlex") return LexGroup::zlex(n);
  if (name == "zrevlex") return LexGroup(order::FiniteLinOrder::fin(n), Significance::GreatestIndex);
  if (name == "ztree") return tree_group(n).group;
  fail(ErrorCode::Parse, "unknown group '" + std::string(name) + "'");
}

}  // namespace krullkit::lex
