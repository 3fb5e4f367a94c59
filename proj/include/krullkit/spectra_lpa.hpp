#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "krullkit/order_core.hpp"
#include "krullkit/rational.hpp"

namespace krullkit::lpa {

using order::Label;

/// Edge multiplicity along a strict pair: a finite m >= 1 or countably many.
class Multiplicity {
 public:
  static Multiplicity finite(std::uint64_t m);
  static Multiplicity omega();
  /// "3", "omega" or "ω".
  static Multiplicity parse(std::string_view text);

  bool is_finite() const noexcept { return !infinite_; }
  std::uint64_t count() const noexcept { return m_; }
  std::string to_string() const;

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;

 private:
  bool infinite_ = false;
  std::uint64_t m_ = 1;
};

struct Arc {
  std::size_t source = 0;
  std::size_t range = 0;
  Multiplicity mult = Multiplicity::finite(1);
};

/// The graph E_P: one vertex per poset element and an arc group p -> q for
/// every p > q.
class LpaGraph {
 public:
  const std::vector<Label>& vertices() const noexcept { return vertices_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::string vertex_name(std::size_t i) const { return "v_" + vertices_.at(i); }

  bool is_acyclic() const;
  /// The defining relations of L_K(E), as documentation text only.
  std::vector<std::string> relations() const;

  friend LpaGraph build_ep(const order::FinitePoset& p, Multiplicity mult);

 private:
  std::vector<Label> vertices_;
  std::vector<Arc> arcs_;
};

LpaGraph build_ep(const order::FinitePoset& p, Multiplicity mult);

/// Vertices with finitely many, but at least one, outgoing edges.
std::vector<std::string> regular_vertices(const LpaGraph& g);

struct PathCount {
  bool countably_infinite = false;
  std::uint64_t exact = 0;
  /// "7" or "aleph(0)".
  std::string to_string() const;
};

/// Paths of every length, vertices included as length-0 paths.
PathCount count_paths(const LpaGraph& g);

/// Deterministic DOT text.
std::string export_dot(const LpaGraph& g);

// ---------------------------------------------------------------------------
// The subset preorder.

/// S1 <= S2 iff every s2 in S2 has some s1 in S1 below it. Subsets are index
/// lists into `p`; throws EmptySubset on an empty argument.
bool subset_preceq(const std::vector<std::size_t>& s1, const std::vector<std::size_t>& s2,
                   const order::FinitePoset& p);
bool subset_preceq_mask(std::uint32_t s1, std::uint32_t s2, const order::FinitePoset& p);

/// One interval of a finitely described subset, in coordinates (see
/// order::coordinate). A missing end is infinite.
struct Piece {
  std::optional<Rational> lo;
  bool lo_closed = false;
  std::optional<Rational> hi;
  bool hi_closed = false;

  friend bool operator==(const Piece&, const Piece&) = default;
};

struct ClassKey {
  std::optional<Rational> infimum;  // nullopt is -inf
  bool attained = false;

  /// "-inf", "1/2" or "1/2!" when attained.
  std::string to_string() const;
  friend bool operator==(const ClassKey&, const ClassKey&) = default;
};

/// Finite union of intervals over rats, ints, omega or omega_op.
class FinDescSubset {
 public:
  /// Pieces are normalized (clipped to the carrier, sorted, merged). Throws
  /// UnsupportedCarrier, and EmptySubset when nothing survives.
  FinDescSubset(order::SymbolicChain carrier, std::vector<Piece> pieces);

  static FinDescSubset singleton(order::SymbolicChain carrier, const Rational& value);
  static FinDescSubset whole(order::SymbolicChain carrier);
  /// Pieces like "(0,inf)" or "[-1,2)u(3,4]", endpoints in chain values.
  static FinDescSubset parse(order::SymbolicChain carrier, std::string_view text);

  const order::SymbolicChain& carrier() const noexcept { return carrier_; }
  const std::vector<Piece>& pieces() const noexcept { return pieces_; }

  /// Membership of a chain value.
  bool contains(const Rational& value) const;
  ClassKey class_key() const;
  /// Downward directed with no least element.
  bool eligible() const { return !class_key().attained; }
  std::string to_string() const;

  friend bool operator==(const FinDescSubset&, const FinDescSubset&) = default;

 private:
  order::SymbolicChain carrier_;
  std::vector<Piece> pieces_;
};

/// Over a chain carrier this reduces to comparing class keys.
bool subset_preceq(const FinDescSubset& s1, const FinDescSubset& s2);

// ---------------------------------------------------------------------------
// The completion.

struct ATElement {
  bool original = true;
  Label label;  // original: poset label or chain value; cut: class key
  std::string name() const { return original ? label : "x[" + label + "]"; }
};

class ATPoset {
 public:
  ATPoset(std::vector<ATElement> elements, std::vector<bool> leq, std::string fragment,
          std::string cardinality);

  const std::vector<ATElement>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * elements_.size() + j]; }
  std::size_t cut_count() const;
  /// "exact" or "finDesc".
  const std::string& fragment() const noexcept { return fragment_; }
  /// "exact" or "symbolic".
  const std::string& cardinality() const noexcept { return cardinality_; }

  bool is_partial_order() const;
  bool is_total() const;
  order::FinitePoset as_poset() const;

  /// Number of subsets examined and eligible subsets found by at_finite.
  std::uint64_t scanned = 0;
  std::uint64_t eligible = 0;

 private:
  std::vector<ATElement> elements_;
  std::vector<bool> leq_;
  std::string fragment_;
  std::string cardinality_;
};

inline constexpr std::size_t kAtFiniteMax = 20;

/// Exhaustive scan of the nonempty subsets; throws TooLarge above 20 elements.
ATPoset at_finite(const order::FinitePoset& p);

std::vector<Rational> default_fd_probes(const order::SymbolicChain& c);

/// The completion restricted to finitely described subsets, with originals
/// limited to `probes`. Throws UnsupportedCarrier outside rats/ints/omega/omega_op.
ATPoset at_fd(const order::SymbolicChain& c, const std::vector<Rational>& probes);
ATPoset at_fd(const order::SymbolicChain& c);

/// Representative of an at_fd element: {q} for originals, (q, inf) for a
/// successor cut, the whole carrier for the bottom.
FinDescSubset representative(const order::SymbolicChain& c, const ATElement& e);
/// Rules (1)-(4) evaluated through subset_preceq on representatives.
bool at_rules_leq(const order::SymbolicChain& c, const ATElement& a, const ATElement& b);

struct SpectrumOrder {
  ATPoset at;
  /// "P[label]" per element of `at`.
  std::vector<std::string> primes;
  bool linear = false;
};

SpectrumOrder spectrum_order(const order::FinitePoset& p);
SpectrumOrder spectrum_order(const order::SymbolicChain& c);

struct DenseInjection {
  /// cut name -> class key of S_r.
  std::vector<std::pair<std::string, std::string>> mapping;
  bool injective = false;
  bool preserving = false;
  bool reflecting = false;
};

/// r |-> [S_r] with S_r = {p in Q : r < p}, over the non-original elements of
/// an at_fd(rats) fragment.
DenseInjection dense_cor_injection(const ATPoset& fragment);

struct BerryFinite {
  order::FinitePoset poset;
  ATPoset at;
  std::size_t longest_chain = 0;
  bool attained = true;
  bool isomorphic = false;
};

/// Disjoint union of chains with the given lengths; labels "c<len>_<i>".
BerryFinite berry_family(const std::vector<std::size_t>& lengths);

/// `chain:n`, `antichain:n` or `chains:1,2,3`.
order::FinitePoset parse_poset(std::string_view text);

}  // namespace krullkit::lpa
