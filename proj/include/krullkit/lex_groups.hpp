#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "krullkit/order_core.hpp"

namespace krullkit::lex {

using order::Label;

/// Which end of the index chain decides a comparison.
enum class Significance {
  LeastIndex,     // lexicographic: the least differing index decides
  GreatestIndex,  // reverse lexicographic: sign at max(supp) decides
};

/// The direct sum of copies of Z over a finite index chain.
class LexGroup {
 public:
  LexGroup(order::FiniteLinOrder index, Significance significance);

  /// Z^n over 0 < 1 < ... < n-1, lexicographic.
  static LexGroup zlex(std::size_t n);

  const order::FiniteLinOrder& index() const noexcept { return index_; }
  Significance significance() const noexcept { return significance_; }
  std::size_t dimension() const noexcept { return index_.size(); }

  /// Index positions from most to least significant.
  std::vector<std::size_t> significance_order() const;

  friend bool operator==(const LexGroup&, const LexGroup&) = default;

 private:
  order::FiniteLinOrder index_;
  Significance significance_;
};

/// Finitely supported integer vector; zero coordinates are never stored.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::map<Label, std::int64_t> coords);

  /// Coordinates listed by index position.
  static GroupElement from_coords(const LexGroup& group, std::span<const std::int64_t> coords);
  /// Parses `{label:value,...}`.
  static GroupElement parse(std::string_view text);

  std::int64_t operator[](const Label& label) const;
  const std::map<Label, std::int64_t>& entries() const noexcept { return coords_; }
  bool is_zero() const noexcept { return coords_.empty(); }
  std::vector<Label> support() const;

  GroupElement operator-() const;
  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

  /// `{label:value,...}` with labels in index order of `group`.
  std::string to_string(const LexGroup& group) const;

 private:
  std::map<Label, std::int64_t> coords_;
};

void check_element(const LexGroup& group, const GroupElement& f);

std::strong_ordering cmp(const LexGroup& group, const GroupElement& a, const GroupElement& b);
bool in_positive_cone(const LexGroup& group, const GroupElement& f);
GroupElement abs(const LexGroup& group, const GroupElement& f);

/// Subgroup of elements supported inside an index segment.
class IsolatedSubgroup {
 public:
  IsolatedSubgroup(LexGroup group, std::set<Label> segment);

  const LexGroup& group() const noexcept { return group_; }
  const std::set<Label>& segment() const noexcept { return segment_; }

  /// Upward-closed (LeastIndex) or downward-closed (GreatestIndex) segment.
  bool well_formed() const;
  bool contains(const GroupElement& f) const;
  bool is_trivial() const { return segment_.empty(); }
  bool subset_of(const IsolatedSubgroup& other) const;

  /// Segment labels in index order, e.g. "{1,2}".
  std::string to_string() const;

  friend bool operator==(const IsolatedSubgroup& a, const IsolatedSubgroup& b) {
    return a.segment_ == b.segment_ && a.group_ == b.group_;
  }

 private:
  LexGroup group_;
  std::set<Label> segment_;
};

struct IsolationSample {
  bool passed = true;
  std::size_t trials = 0;
  /// (h, x) with h in H, |x| <= |h| and x not in H.
  std::optional<std::pair<GroupElement, GroupElement>> counterexample;
};

inline constexpr std::size_t kDefaultTrials = 10'000;
inline constexpr std::int64_t kDefaultBound = 8;

/// Random search for a violation of the interval condition. A segment that
/// breaks the closure rule throws MalformedSegment before any sampling.
IsolationSample is_isolated_sample(const IsolatedSubgroup& subgroup, std::size_t trials,
                                   std::int64_t bound, std::uint64_t seed);

/// Smallest well-formed segment subgroup containing f. Throws ZeroElement.
IsolatedSubgroup isolated_hull(const LexGroup& group, const GroupElement& f);

/// All well-formed segment subgroups, trivial one first, ordered by inclusion.
std::vector<IsolatedSubgroup> segment_subgroups(const LexGroup& group);

/// Chain of nontrivial isolated subgroups (the whole group included) under
/// inclusion; labels are the segments.
order::FiniteLinOrder rank(const LexGroup& group);

/// Restriction of an element of a lexicographic sum to the labels of its
/// first summand.
GroupElement project_first_factor(const LexGroup& sum, const LexGroup& first,
                                  const GroupElement& f);

struct ConcatenationReport {
  LexGroup sum;
  /// rank of the lexicographic sum.
  order::FiniteLinOrder lhs;
  /// concatenation of the summands' ranks over the reversed summand order.
  order::FiniteLinOrder rhs;
  /// subgroup of the sum -> (summand, subgroup of the summand).
  std::optional<order::OrderMap> witness;
  bool bijective = false;
  bool preserving = false;
  bool reflecting = false;
  bool projection_monotone = false;

  bool holds() const { return witness && bijective && preserving && reflecting && projection_monotone; }
};

/// Builds the lexicographic sum over a fresh concatenated index and compares
/// its rank with the concatenation of the summands' ranks along the natural
/// correspondence. Every summand must be LeastIndex.
ConcatenationReport check_concatenation_theorem(std::span<const LexGroup> groups,
                                                std::uint64_t seed = 1,
                                                std::size_t trials = 2000);

// ---------------------------------------------------------------------------
// Binary tree construction.

inline constexpr std::string_view kEmptyWord = "ε";

/// Strings over {0,1}: proper prefixes come first, otherwise the first
/// differing bit decides. Plain byte comparison implements exactly this.
bool tree_less(const std::string& a, const std::string& b);
/// All words of length < depth in tree order, the empty word labelled "ε".
order::FiniteLinOrder tree_index(std::size_t depth);

struct TreeGroup {
  std::size_t depth = 0;
  LexGroup group;
  /// length-`depth` words in tree order with their subgroups G_x.
  std::vector<std::pair<std::string, IsolatedSubgroup>> leaves;

  std::size_t distinct_segments() const;
  /// x < z implies G_x within G_z.
  bool monotone() const;
};

/// Z^(2^{<n}) ordered reverse-lexicographically over the tree order, together
/// with the subgroups {f : supp f below x} for each leaf x. Requires n >= 1.
TreeGroup tree_group(std::size_t n);

// ---------------------------------------------------------------------------
// Valuation spectrum.

struct ValuationSpectrum {
  /// "P0" < "P1" < ... ordered by inclusion of primes.
  order::FiniteLinOrder primes;
  /// subgroups[i] corresponds to primes[i]; inclusion-reversing.
  std::vector<IsolatedSubgroup> subgroups;

  std::size_t krull_dimension() const { return primes.size() - 1; }
  /// "P0 ⊂ P1 ⊂ ...".
  std::string to_string() const;
};

ValuationSpectrum valuation_spectrum(const LexGroup& group);

/// `zlex(n)` or `ztree(n)`.
LexGroup parse_group(std::string_view text);

}  // namespace krullkit::lex
