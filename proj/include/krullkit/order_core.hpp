#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "krullkit/rational.hpp"

namespace krullkit::order {

using Label = std::string;

/// A finite chain. Position in `elements()` is the order.
class FiniteLinOrder {
 public:
  FiniteLinOrder() = default;
  explicit FiniteLinOrder(std::vector<Label> ascending);

  /// Labels "0" < "1" < ... < "n-1".
  static FiniteLinOrder fin(std::size_t n);

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const std::vector<Label>& elements() const noexcept { return elements_; }
  const Label& at(std::size_t i) const { return elements_.at(i); }

  bool contains(std::string_view label) const;
  std::size_t position(std::string_view label) const;
  bool less(std::string_view a, std::string_view b) const;

  /// Order type in the chain grammar, e.g. "fin(3)".
  std::string type_string() const;

  friend bool operator==(const FiniteLinOrder& a, const FiniteLinOrder& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<Label> elements_;
  std::unordered_map<Label, std::size_t> position_;
};

/// A finite partial order given by its full (reflexive) relation.
class FinitePoset {
 public:
  FinitePoset() = default;
  /// `leq_pairs` must already be reflexive, antisymmetric and transitive;
  /// throws MalformedInput naming the first violated axiom otherwise.
  FinitePoset(std::vector<Label> elements, const std::vector<std::pair<Label, Label>>& leq_pairs);

  static FinitePoset from_matrix(std::vector<Label> elements, std::vector<std::vector<bool>> leq);
  static FinitePoset chain(std::size_t n);
  static FinitePoset antichain(std::size_t n);
  static FinitePoset from_lin_order(const FiniteLinOrder& order);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Label>& elements() const noexcept { return elements_; }
  const Label& at(std::size_t i) const { return elements_.at(i); }
  std::size_t index_of(std::string_view label) const;

  bool leq(std::size_t i, std::size_t j) const { return leq_[i * elements_.size() + j]; }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  bool leq(std::string_view a, std::string_view b) const { return leq(index_of(a), index_of(b)); }

  bool is_chain() const;
  /// All (p, q) with q < p, sorted by (label p, label q).
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs_descending() const;

 private:
  void validate() const;

  std::vector<Label> elements_;
  std::vector<bool> leq_;
};

// ---------------------------------------------------------------------------
// Symbolic chains: fin(n), omega, omega_op, ints, rats and their concatenations.

enum class ChainKind { Fin, Omega, OmegaOp, Ints, Rats, Concat };

class SymbolicChain {
 public:
  static SymbolicChain fin(std::size_t n);
  static SymbolicChain omega();
  static SymbolicChain omega_op();
  static SymbolicChain ints();
  static SymbolicChain rats();
  /// Normalizing constructor: nested concatenations are flattened, empty
  /// finite parts dropped and adjacent finite parts merged. A single surviving
  /// part is returned unwrapped.
  static SymbolicChain concat(std::vector<SymbolicChain> parts);

  /// Parses the text grammar `fin(n) | omega | omega_op | ints | rats |
  /// concat(a, b, ...)`.
  static SymbolicChain parse(std::string_view text);
  std::string to_string() const;

  ChainKind kind() const noexcept { return kind_; }
  std::size_t fin_size() const noexcept { return n_; }
  const std::vector<SymbolicChain>& parts() const noexcept { return parts_; }
  bool is_finite() const;

  /// Number of top-level parts a point may index (1 unless Concat).
  std::size_t part_count() const { return kind_ == ChainKind::Concat ? parts_.size() : 1; }
  const SymbolicChain& part(std::size_t i) const;

  friend bool operator==(const SymbolicChain&, const SymbolicChain&) = default;

 private:
  ChainKind kind_ = ChainKind::Fin;
  std::size_t n_ = 0;
  std::vector<SymbolicChain> parts_;
};

/// A finitely presented element of a symbolic chain: the index of the
/// top-level part and a value inside it. Fin(n) values are 0..n-1, Omega and
/// OmegaOp values are naturals (OmegaOp is ordered by >), Ints values are
/// integers and Rats values rationals.
struct ChainPoint {
  std::size_t part = 0;
  Rational value;

  friend bool operator==(const ChainPoint&, const ChainPoint&) = default;
};

bool contains(const SymbolicChain& chain, const ChainPoint& point);
std::strong_ordering compare(const SymbolicChain& chain, const ChainPoint& a, const ChainPoint& b);

/// Monotone embedding of a single-part chain into Q (OmegaOp k maps to -k).
Rational coordinate(const SymbolicChain& chain, const Rational& value);

/// Finite sample of points: every element of a Fin part, the first `depth`
/// elements of omega/omega_op, [-depth, depth] for ints and a spread of
/// small-denominator rationals for rats.
std::vector<ChainPoint> truncation(const SymbolicChain& chain, std::size_t depth);
ChainPoint sample_point(const SymbolicChain& chain, std::mt19937_64& rng);
std::string point_to_string(const SymbolicChain& chain, const ChainPoint& point);

// ---------------------------------------------------------------------------
// Constructors on orders.

SymbolicChain reverse(const SymbolicChain& chain);
/// Image of `point` under the canonical anti-isomorphism chain -> reverse(chain).
ChainPoint reverse_point(const SymbolicChain& chain, const ChainPoint& point);
FiniteLinOrder reverse(const FiniteLinOrder& order);

/// (i, s) < (j, t) iff i < j, or i = j and s < t. Labels become "i:label".
FiniteLinOrder concat(std::span<const FiniteLinOrder> parts);

/// (a1, b1) < (a2, b2) iff a1 < a2, or a1 = a2 and b1 < b2. Labels "(a,b)".
FiniteLinOrder lex_product(const FiniteLinOrder& a, const FiniteLinOrder& b);

enum class Density {
  Strict,            // for x < y some d with x < d < y
  RightSeparating,   // for x < y some d with x < d <= y
};

bool is_dense(std::span<const Label> subset, const FiniteLinOrder& order, Density variant);

// ---------------------------------------------------------------------------
// Order maps.

struct OrderMap {
  std::map<Label, Label> mapping;

  const Label& operator()(const Label& x) const { return mapping.at(x); }
};

bool is_order_preserving(const OrderMap& f, const FinitePoset& source, const FinitePoset& target);
bool is_order_reflecting(const OrderMap& f, const FinitePoset& source, const FinitePoset& target);
bool is_bijective(const OrderMap& f, const FinitePoset& source, const FinitePoset& target);
bool is_order_isomorphism(const OrderMap& f, const FinitePoset& source, const FinitePoset& target);

/// Chains are isomorphic iff they have the same length; the witness pairs
/// elements by position.
std::optional<OrderMap> order_iso(const FiniteLinOrder& a, const FiniteLinOrder& b);
/// Backtracking search over bijections, pruned by up/down-set sizes.
std::optional<OrderMap> order_iso(const FinitePoset& a, const FinitePoset& b);

}  // namespace krullkit::order
