#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "krullkit/order_core.hpp"
#include "krullkit/rational.hpp"

namespace krullkit::chains {

using order::Label;
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxGround = 64;

/// A chain of subsets of a finite ground set, links stored by increasing size.
class SubsetChain {
 public:
  SubsetChain() = default;
  /// Links may be given in any order; they must be pairwise distinct and
  /// totally ordered by inclusion. Throws MalformedInput / TooLarge.
  SubsetChain(std::vector<Label> ground, const std::vector<std::vector<Label>>& links);
  static SubsetChain from_masks(std::vector<Label> ground, std::vector<Mask> links);

  const std::vector<Label>& ground() const noexcept { return ground_; }
  const std::vector<Mask>& links() const noexcept { return links_; }
  std::size_t size() const noexcept { return links_.size(); }
  std::size_t index_of(const Label& label) const;

  std::vector<Label> labels(Mask m) const;
  /// "{a,b}" in ground order.
  std::string link_to_string(Mask m) const;

  friend bool operator==(const SubsetChain&, const SubsetChain&) = default;

 private:
  void validate();

  std::vector<Label> ground_;
  std::vector<Mask> links_;
};

/// x < y iff some link contains x but not y.
class COrder {
 public:
  explicit COrder(const SubsetChain& chain);

  std::size_t size() const noexcept { return n_; }
  bool less(std::size_t x, std::size_t y) const { return rel_[x * n_ + y]; }
  /// All strict pairs (x, y), in ground order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  bool irreflexive() const;
  bool transitive() const;

 private:
  std::size_t n_ = 0;
  std::vector<bool> rel_;
};

COrder c_order(const SubsetChain& chain);

struct SeparatedSet {
  /// Members sorted by the C-order.
  std::vector<Label> members;
  /// Links intersected with the members, over the members as ground set.
  SubsetChain restricted;
  bool separated = false;
  bool maximal = false;
  bool injective = false;
  bool total = false;
};

/// Greedy pass in `hint` order (defaults to ground order); the resulting
/// properties are verified rather than assumed.
SeparatedSet max_separated(const SubsetChain& chain, const std::vector<Label>& hint = {});

struct DenseToChain {
  SubsetChain chain;
  /// Elements s whose down-set X_s repeated the previous one.
  std::vector<Label> collapsed;
};

/// X_s = {x in d : x <= s} for s ascending in b, repeated sets dropped.
DenseToChain dense_to_chain(const order::FiniteLinOrder& b, const std::vector<Label>& d);

// ---------------------------------------------------------------------------
// Cuts of S' x Q, ordered lexicographically.

struct PreparedChain {
  SubsetChain chain;
  SeparatedSet separated;
  /// Link i restricted to S' is the first prefix[i] members.
  std::vector<std::size_t> prefix;

  std::size_t member_index(const Label& label) const;

  friend bool operator==(const PreparedChain& a, const PreparedChain& b) {
    return a.chain == b.chain && a.separated.members == b.separated.members;
  }
};

std::shared_ptr<const PreparedChain> prepare(const SubsetChain& chain,
                                             const std::vector<Label>& hint = {});

enum class CutKind { FullColumns, Seg };

struct Cut {
  std::shared_ptr<const PreparedChain> prepared;
  CutKind kind = CutKind::FullColumns;
  std::size_t link = 0;    // FullColumns
  std::size_t member = 0;  // Seg: position in S'
  Rational q;              // Seg

  static Cut columns(std::shared_ptr<const PreparedChain> p, std::size_t link);
  static Cut seg(std::shared_ptr<const PreparedChain> p, std::size_t member, Rational q);

  /// `cols({a,b})` or `seg(a, 1/2)`.
  std::string to_string() const;
};

enum class CutRelation { Subset, Equal, Superset };
const char* to_string(CutRelation r);

/// Throws IncompatibleCuts when the cuts come from different preparations.
CutRelation cut_cmp(const Cut& a, const Cut& b);

/// A Seg cut strictly between a and b, or nullopt if they are equal.
std::optional<Cut> betweenness_witness(const Cut& a, const Cut& b);

/// (s, q) in the cut, decided from the definitions; s is any ground label.
bool membership_oracle(const Cut& cut, const Label& s, const Rational& q);

std::vector<Rational> default_probes();

struct DenseConstruction {
  std::shared_ptr<const PreparedChain> prepared;
  /// All generated cuts in ascending order.
  std::vector<Cut> cuts;
  /// witnesses[i] lies strictly between cuts[i] and cuts[i+1].
  std::vector<Cut> witnesses;

  std::size_t column_count() const;
  /// Runs dense_to_chain over the cut order with the Seg cuts as the dense
  /// set and counts the distinct down-sets at column cuts.
  std::size_t round_trip_links() const;
};

DenseConstruction chain_to_dense(const SubsetChain& chain,
                                 const std::vector<Rational>& probes = default_probes(),
                                 const std::vector<Label>& hint = {});

// ---------------------------------------------------------------------------
// Finite ded.

inline constexpr std::size_t kDedExhaustiveMax = 6;

struct DedFinite {
  std::size_t n = 0;
  /// Number of sets in a longest chain of subsets.
  std::size_t links = 0;
  std::size_t containments() const { return links == 0 ? 0 : links - 1; }
  bool exhaustive = false;
  /// empty, {0}, {0,1}, ... over labels "0".."n-1".
  SubsetChain witness;
};

/// Longest subset chain of an n-set. Exhaustive up to kDedExhaustiveMax;
/// beyond that only with witness_only (throws TooLarge otherwise).
DedFinite ded_finite(std::size_t n, bool witness_only = false);

}  // namespace krullkit::chains
