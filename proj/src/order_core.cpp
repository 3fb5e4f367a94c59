#include "krullkit/order_core.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "krullkit/error.hpp"

namespace krullkit::order {

// ---------------------------------------------------------------------------
// FiniteLinOrder

FiniteLinOrder::FiniteLinOrder(std::vector<Label> ascending) : elements_(std::move(ascending)) {
  position_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!position_.emplace(elements_[i], i).second) {
      fail(ErrorCode::MalformedInput, "duplicate label '" + elements_[i] + "' in linear order");
    }
  }
}

FiniteLinOrder FiniteLinOrder::fin(std::size_t n) {
  std::vector<Label> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return FiniteLinOrder(std::move(labels));
}

bool FiniteLinOrder::contains(std::string_view label) const {
  return position_.find(Label(label)) != position_.end();
}

std::size_t FiniteLinOrder::position(std::string_view label) const {
  auto it = position_.find(Label(label));
  if (it == position_.end()) {
    fail(ErrorCode::MalformedInput, "label '" + Label(label) + "' is not in the order");
  }
  return it->second;
}

bool FiniteLinOrder::less(std::string_view a, std::string_view b) const {
  return position(a) < position(b);
}

std::string FiniteLinOrder::type_string() const {
  return "fin(" + std::to_string(elements_.size()) + ")";
}

FiniteLinOrder reverse(const FiniteLinOrder& order) {
  std::vector<Label> labels(order.elements().rbegin(), order.elements().rend());
  return FiniteLinOrder(std::move(labels));
}

// ---------------------------------------------------------------------------
// FinitePoset

FinitePoset::FinitePoset(std::vector<Label> elements,
                         const std::vector<std::pair<Label, Label>>& leq_pairs)
    : elements_(std::move(elements)), leq_(elements_.size() * elements_.size(), false) {
  for (const auto& [a, b] : leq_pairs) leq_[index_of(a) * elements_.size() + index_of(b)] = true;
  validate();
}

FinitePoset FinitePoset::from_matrix(std::vector<Label> elements,
                                     std::vector<std::vector<bool>> leq) {
  FinitePoset p;
  const std::size_t n = elements.size();
  if (leq.size() != n) fail(ErrorCode::MalformedInput, "relation matrix has wrong size");
  p.elements_ = std::move(elements);
  p.leq_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n) fail(ErrorCode::MalformedInput, "relation matrix has wrong size");
    for (std::size_t j = 0; j < n; ++j) p.leq_[i * n + j] = leq[i][j];
  }
  p.validate();
  return p;
}

FinitePoset FinitePoset::chain(std::size_t n) { return from_lin_order(FiniteLinOrder::fin(n)); }

FinitePoset FinitePoset::antichain(std::size_t n) {
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
  return from_matrix(FiniteLinOrder::fin(n).elements(), std::move(m));
}

FinitePoset FinitePoset::from_lin_order(const FiniteLinOrder& order) {
  const std::size_t n = order.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m[i][j] = true;
  return from_matrix(order.elements(), std::move(m));
}

std::size_t FinitePoset::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == label) return i;
  fail(ErrorCode::MalformedInput, "label '" + Label(label) + "' is not in the poset");
}

void FinitePoset::validate() const {
  const std::size_t n = elements_.size();
  std::set<Label> seen(elements_.begin(), elements_.end());
  if (seen.size() != n) fail(ErrorCode::MalformedInput, "duplicate poset labels");
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq(i, i)) fail(ErrorCode::MalformedInput, "relation is not reflexive at " + elements_[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq(i, j) && leq(j, i)) {
        fail(ErrorCode::MalformedInput,
             "relation is not antisymmetric: " + elements_[i] + ", " + elements_[j]);
      }
      if (!leq(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (leq(j, k) && !leq(i, k)) {
          fail(ErrorCode::MalformedInput, "relation is not transitive: " + elements_[i] + " <= " +
                                              elements_[j] + " <= " + elements_[k]);
        }
      }
    }
  }
}

bool FinitePoset::is_chain() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (!leq(i, j) && !leq(j, i)) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::strict_pairs_descending() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 0; p < size(); ++p)
    for (std::size_t q = 0; q < size(); ++q)
      if (less(q, p)) out.emplace_back(p, q);
  return out;
}

// ---------------------------------------------------------------------------
// SymbolicChain

SymbolicChain SymbolicChain::fin(std::size_t n) {
  SymbolicChain c;
  c.kind_ = ChainKind::Fin;
  c.n_ = n;
  return c;
}

SymbolicChain SymbolicChain::omega() {
  SymbolicChain c;
  c.kind_ = ChainKind::Omega;
  return c;
}

SymbolicChain SymbolicChain::omega_op() {
  SymbolicChain c;
  c.kind_ = ChainKind::OmegaOp;
  return c;
}

SymbolicChain SymbolicChain::ints() {
  SymbolicChain c;
  c.kind_ = ChainKind::Ints;
  return c;
}

SymbolicChain SymbolicChain::rats() {
  SymbolicChain c;
  c.kind_ = ChainKind::Rats;
  return c;
}

SymbolicChain SymbolicChain::concat(std::vector<SymbolicChain> parts) {
  std::vector<SymbolicChain> flat;
  for (auto& part : parts) {
    if (part.kind_ == ChainKind::Concat) {
      for (const auto& inner : part.parts_) flat.push_back(inner);
    } else {
      flat.push_back(std::move(part));
    }
  }
  std::vector<SymbolicChain> merged;
  for (auto& part : flat) {
    if (part.kind_ == ChainKind::Fin) {
      if (part.n_ == 0) continue;
      if (!merged.empty() && merged.back().kind_ == ChainKind::Fin) {
        merged.back().n_ += part.n_;
        continue;
      }
    }
    merged.push_back(std::move(part));
  }
  if (merged.empty()) return fin(0);
  if (merged.size() == 1) return std::move(merged.front());
  SymbolicChain c;
  c.kind_ = ChainKind::Concat;
  c.parts_ = std::move(merged);
  return c;
}

bool SymbolicChain::is_finite() const {
  switch (kind_) {
    case ChainKind::Fin: return true;
    case ChainKind::Concat:
      return std::all_of(parts_.begin(), parts_.end(),
                         [](const SymbolicChain& p) { return p.is_finite(); });
    default: return false;
  }
}

const SymbolicChain& SymbolicChain::part(std::size_t i) const {
  if (kind_ == ChainKind::Concat) return parts_.at(i);
  if (i != 0) fail(ErrorCode::MalformedInput, "part index out of range");
  return *this;
}

std::string SymbolicChain::to_string() const {
  switch (kind_) {
    case ChainKind::Fin: return "fin(" + std::to_string(n_) + ")";
    case ChainKind::Omega: return "omega";
    case ChainKind::OmegaOp: return "omega_op";
    case ChainKind::Ints: return "ints";
    case ChainKind::Rats: return "rats";
    case ChainKind::Concat: {
      std::string out = "concat(";
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ", ";
        out += parts_[i].to_string();
      }
      return out + ")";
    }
  }
  return {};
}

namespace {

class ChainParser {
 public:
  explicit ChainParser(std::string_view text) : text_(text) {}

  SymbolicChain parse_all() {
    SymbolicChain c = parse_chain();
    skip_ws();
    if (pos_ != text_.size()) error("trailing input");
    return c;
  }

 private:
  SymbolicChain parse_chain() {
    skip_ws();
    std::string word = identifier();
    if (word == "omega") return SymbolicChain::omega();
    if (word == "omega_op") return SymbolicChain::omega_op();
    if (word == "ints") return SymbolicChain::ints();
    if (word == "rats") return SymbolicChain::rats();
    if (word == "fin") {
      expect('(');
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected a natural number");
      std::size_t n = std::stoull(std::string(text_.substr(start, pos_ - start)));
      expect(')');
      return SymbolicChain::fin(n);
    }
    if (word == "concat") {
      expect('(');
      std::vector<SymbolicChain> parts;
      parts.push_back(parse_chain());
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        parts.push_back(parse_chain());
        skip_ws();
      }
      expect(')');
      return SymbolicChain::concat(std::move(parts));
    }
    error("unknown chain '" + word + "'");
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) error("expected a chain name");
    return std::string(text_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip_ws();
    if (peek() != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::Parse, what + " at offset " + std::to_string(pos_) + " in '" +
                               std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SymbolicChain SymbolicChain::parse(std::string_view text) { return ChainParser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Points

bool contains(const SymbolicChain& chain, const ChainPoint& point) {
  if (point.part >= chain.part_count()) return false;
  const SymbolicChain& part = chain.part(point.part);
  const Rational& v = point.value;
  switch (part.kind()) {
    case ChainKind::Fin:
      return v.is_integer() && v.num() >= 0 && static_cast<std::size_t>(v.num()) < part.fin_size();
    case ChainKind::Omega:
    case ChainKind::OmegaOp: return v.is_integer() && v.num() >= 0;
    case ChainKind::Ints: return v.is_integer();
    case ChainKind::Rats: return true;
    case ChainKind::Concat: return false;
  }
  return false;
}

Rational coordinate(const SymbolicChain& chain, const Rational& value) {
  if (chain.kind() == ChainKind::Concat) {
    fail(ErrorCode::UnsupportedCarrier, "coordinate() needs a single-part chain");
  }
  return chain.kind() == ChainKind::OmegaOp ? -value : value;
}

std::strong_ordering compare(const SymbolicChain& chain, const ChainPoint& a, const ChainPoint& b) {
  if (!contains(chain, a) || !contains(chain, b)) {
    fail(ErrorCode::MalformedInput, "point does not belong to " + chain.to_string());
  }
  if (a.part != b.part) return a.part <=> b.part;
  const SymbolicChain& part = chain.part(a.part);
  return coordinate(part, a.value) <=> coordinate(part, b.value);
}

std::vector<ChainPoint> truncation(const SymbolicChain& chain, std::size_t depth) {
  std::vector<ChainPoint> out;
  const auto d = static_cast<std::int64_t>(depth);
  for (std::size_t p = 0; p < chain.part_count(); ++p) {
    const SymbolicChain& part = chain.part(p);
    switch (part.kind()) {
      case ChainKind::Fin:
        for (std::size_t i = 0; i < part.fin_size(); ++i)
          out.push_back({p, Rational(static_cast<std::int64_t>(i))});
        break;
      case ChainKind::Omega:
      case ChainKind::OmegaOp:
        for (std::int64_t i = 0; i < d; ++i) out.push_back({p, Rational(i)});
        break;
      case ChainKind::Ints:
        for (std::int64_t i = -d; i <= d; ++i) out.push_back({p, Rational(i)});
        break;
      case ChainKind::Rats: {
        std::set<Rational> values;
        for (std::int64_t den = 1; den <= 3; ++den)
          for (std::int64_t i = -d; i <= d; ++i) values.insert(Rational(i, den));
        for (const auto& v : values) out.push_back({p, v});
        break;
      }
      case ChainKind::Concat: break;
    }
  }
  return out;
}

ChainPoint sample_point(const SymbolicChain& chain, std::mt19937_64& rng) {
  std::vector<std::size_t> usable;
  for (std::size_t p = 0; p < chain.part_count(); ++p) {
    const SymbolicChain& part = chain.part(p);
    if (!(part.kind() == ChainKind::Fin && part.fin_size() == 0)) usable.push_back(p);
  }
  if (usable.empty()) fail(ErrorCode::MalformedInput, "cannot sample from the empty chain");
  std::size_t p = usable[std::uniform_int_distribution<std::size_t>(0, usable.size() - 1)(rng)];
  const SymbolicChain& part = chain.part(p);
  switch (part.kind()) {
    case ChainKind::Fin: {
      auto n = static_cast<std::int64_t>(part.fin_size());
      return {p, Rational(std::uniform_int_distribution<std::int64_t>(0, n - 1)(rng))};
    }
    case ChainKind::Omega:
    case ChainKind::OmegaOp:
      return {p, Rational(std::uniform_int_distribution<std::int64_t>(0, 999)(rng))};
    case ChainKind::Ints:
      return {p, Rational(std::uniform_int_distribution<std::int64_t>(-1000, 1000)(rng))};
    case ChainKind::Rats:
      return {p, Rational(std::uniform_int_distribution<std::int64_t>(-1000, 1000)(rng),
                          std::uniform_int_distribution<std::int64_t>(1, 50)(rng))};
    case ChainKind::Concat: break;
  }
  fail(ErrorCode::MalformedInput, "unnormalized chain");
}

std::string point_to_string(const SymbolicChain& chain, const ChainPoint& point) {
  if (chain.kind() == ChainKind::Concat) {
    return "(" + std::to_string(point.part) + ", " + point.value.to_string() + ")";
  }
  return point.value.to_string();
}

// ---------------------------------------------------------------------------
// reverse / concat / lex_product

SymbolicChain reverse(const SymbolicChain& chain) {
  switch (chain.kind()) {
    case ChainKind::Omega: return SymbolicChain::omega_op();
    case ChainKind::OmegaOp: return SymbolicChain::omega();
    case ChainKind::Concat: {
      std::vector<SymbolicChain> parts;
      for (auto it = chain.parts().rbegin(); it != chain.parts().rend(); ++it)
        parts.push_back(reverse(*it));
      return SymbolicChain::concat(std::move(parts));
    }
    default: return chain;
  }
}

ChainPoint reverse_point(const SymbolicChain& chain, const ChainPoint& point) {
  if (!contains(chain, point)) {
    fail(ErrorCode::MalformedInput, "point does not belong to " + chain.to_string());
  }
  const std::size_t parts = chain.part_count();
  const SymbolicChain& part = chain.part(point.part);
  ChainPoint out{parts - 1 - point.part, point.value};
  switch (part.kind()) {
    case ChainKind::Fin:
      out.value = Rational(static_cast<std::int64_t>(part.fin_size()) - 1) - point.value;
      break;
    case ChainKind::Ints:
    case ChainKind::Rats: out.value = -point.value; break;
    default: break;
  }
  return out;
}

FiniteLinOrder concat(std::span<const FiniteLinOrder> parts) {
  std::vector<Label> labels;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& x : parts[i].elements()) labels.push_back(std::to_string(i) + ":" + x);
  return FiniteLinOrder(std::move(labels));
}

FiniteLinOrder lex_product(const FiniteLinOrder& a, const FiniteLinOrder& b) {
  std::vector<Label> labels;
  labels.reserve(a.size() * b.size());
  for (const auto& x : a.elements())
    for (const auto& y : b.elements()) labels.push_back("(" + x + "," + y + ")");
  return FiniteLinOrder(std::move(labels));
}

bool is_dense(std::span<const Label> subset, const FiniteLinOrder& order, Density variant) {
  std::vector<bool> in_subset(order.size(), false);
  for (const auto& d : subset) in_subset[order.position(d)] = true;
  // prefix[k] = members among positions < k
  std::vector<std::size_t> prefix(order.size() + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i) prefix[i + 1] = prefix[i] + (in_subset[i] ? 1 : 0);
  for (std::size_t x = 0; x < order.size(); ++x) {
    for (std::size_t y = x + 1; y < order.size(); ++y) {
      std::size_t hi = variant == Density::Strict ? y : y + 1;
      if (prefix[hi] - prefix[x + 1] == 0) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Order maps

bool is_order_preserving(const OrderMap& f, const FinitePoset& source, const FinitePoset& target) {
  for (std::size_t i = 0; i < source.size(); ++i)
    for (std::size_t j = 0; j < source.size(); ++j)
      if (source.leq(i, j) && !target.leq(f(source.at(i)), f(source.at(j)))) return false;
  return true;
}

bool is_order_reflecting(const OrderMap& f, const FinitePoset& source, const FinitePoset& target) {
  for (std::size_t i = 0; i < source.size(); ++i)
    for (std::size_t j = 0; j < source.size(); ++j)
      if (target.leq(f(source.at(i)), f(source.at(j))) && !source.leq(i, j)) return false;
  return true;
}

bool is_bijective(const OrderMap& f, const FinitePoset& source, const FinitePoset& target) {
  if (f.mapping.size() != source.size() || source.size() != target.size()) return false;
  std::set<Label> image;
  for (const auto& x : source.elements()) {
    auto it = f.mapping.find(x);
    if (it == f.mapping.end()) return false;
    target.index_of(it->second);
    image.insert(it->second);
  }
  return image.size() == target.size();
}

bool is_order_isomorphism(const OrderMap& f, const FinitePoset& source, const FinitePoset& target) {
  return is_bijective(f, source, target) && is_order_preserving(f, source, target) &&
         is_order_reflecting(f, source, target);
}

std::optional<OrderMap> order_iso(const FiniteLinOrder& a, const FiniteLinOrder& b) {
  if (a.size() != b.size()) return std::nullopt;
  OrderMap f;
  for (std::size_t i = 0; i < a.size(); ++i) f.mapping.emplace(a.at(i), b.at(i));
  return f;
}

std::optional<OrderMap> order_iso(const FinitePoset& a, const FinitePoset& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;

  auto signature = [](const FinitePoset& p, std::size_t i) {
    std::size_t up = 0, down = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
      up += p.leq(i, j) ? 1 : 0;
      down += p.leq(j, i) ? 1 : 0;
    }
    return std::pair{up, down};
  };
  std::vector<std::pair<std::size_t, std::size_t>> sig_a(n), sig_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    sig_a[i] = signature(a, i);
    sig_b[i] = signature(b, i);
  }
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || sig_a[i] != sig_b[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        ok = a.leq(i, k) == b.leq(j, image[k]) && a.leq(k, i) == b.leq(image[k], j);
      }
      if (!ok) continue;
      used[j] = true;
      image[i] = j;
      if (extend(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  OrderMap f;
  for (std::size_t i = 0; i < n; ++i) f.mapping.emplace(a.at(i), b.at(image[i]));
  return f;
}

}  // namespace krullkit::order
