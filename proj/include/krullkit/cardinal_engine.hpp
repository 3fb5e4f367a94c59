#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace krullkit::card {

/// Ordinal below w^w in Cantor normal form: sum of w^e * c, e strictly
/// decreasing, c >= 1.
class Ordinal {
 public:
  Ordinal() = default;
  static Ordinal natural(std::uint64_t n);
  static Ordinal omega_power(std::uint32_t e, std::uint64_t c = 1);
  /// `0`, `3`, `w`, `w*2+3`, `w^2`, `w^3*2+w+1`; `ω` is accepted for `w`.
  static Ordinal parse(std::string_view text);

  const std::vector<std::pair<std::uint32_t, std::uint64_t>>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const noexcept { return terms_.empty() || terms_.front().first == 0; }
  bool is_successor() const noexcept { return !terms_.empty() && terms_.back().first == 0; }
  bool is_limit() const noexcept { return !terms_.empty() && terms_.back().first > 0; }
  /// Value of a finite ordinal.
  std::uint64_t finite_value() const;

  Ordinal successor() const;
  /// Requires is_successor().
  Ordinal predecessor() const;

  friend Ordinal operator+(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal&, const Ordinal&) = default;
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

  std::string to_string() const;

 private:
  std::vector<std::pair<std::uint32_t, std::uint64_t>> terms_;
};

/// A finite cardinal n or aleph(alpha).
class Cardinal {
 public:
  Cardinal() = default;
  static Cardinal finite(std::uint64_t n);
  static Cardinal aleph(Ordinal index);
  static Cardinal aleph(std::uint64_t index) { return aleph(Ordinal::natural(index)); }
  /// `42`, `aleph(0)`, `aleph(w*2+3)`.
  static Cardinal parse(std::string_view text);

  bool is_finite() const noexcept { return !infinite_; }
  bool is_infinite() const noexcept { return infinite_; }
  std::uint64_t value() const noexcept { return n_; }
  const Ordinal& index() const noexcept { return index_; }

  /// kappa^+ (n + 1 for finite n).
  Cardinal successor() const;

  friend bool operator==(const Cardinal&, const Cardinal&) = default;
  friend std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b);

  std::string to_string() const;

 private:
  bool infinite_ = false;
  std::uint64_t n_ = 0;
  Ordinal index_;
};

/// A cardinal or 2^cardinal, written `aleph(1)` or `2^aleph(1)`.
struct CardExpr {
  Cardinal base;
  bool power = false;

  static CardExpr parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const CardExpr&, const CardExpr&) = default;
};

enum class Tri { False, True, Unknown };
const char* to_string(Tri t);

/// [lo, hi]; a missing hi means unbounded.
struct CardRange {
  Cardinal lo;
  std::optional<Cardinal> hi;

  bool exact() const { return hi && *hi == lo; }
  /// `aleph(2)`, `[aleph(2), aleph(3)]` or `[aleph(2), inf)`.
  std::string to_string() const;
};

/// How 2^kappa is decided for infinite kappa.
class AxiomMode {
 public:
  enum class Kind { GCH, Table };

  static AxiomMode gch();
  /// Explicit values 2^aleph(a) = aleph(b); from `gch_from` upward 2^k = k^+.
  /// Throws InconsistentTable unless every value is at least k^+ and the
  /// values are monotone.
  static AxiomMode table(std::map<Ordinal, Ordinal> entries, std::optional<Ordinal> gch_from = std::nullopt);
  static AxiomMode empty_table() { return table({}); }
  /// 2^aleph(0) = aleph(2) and 2^k = k^+ for k >= aleph(1).
  static AxiomMode cohen();

  Kind kind() const noexcept { return kind_; }
  const std::map<Ordinal, Ordinal>& entries() const noexcept { return entries_; }
  const std::optional<Ordinal>& gch_from() const noexcept { return gch_from_; }
  /// "gch", "table" or "cohen".
  const std::string& name() const noexcept { return name_; }

 private:
  Kind kind_ = Kind::GCH;
  std::map<Ordinal, Ordinal> entries_;
  std::optional<Ordinal> gch_from_;
  std::string name_ = "gch";
};

CardRange card_exp2(const Cardinal& k, const AxiomMode& mode);
CardRange value_of(const CardExpr& e, const AxiomMode& mode);

Tri known_le(const CardExpr& a, const CardExpr& b, const AxiomMode& mode);
Tri known_lt(const CardExpr& a, const CardExpr& b, const AxiomMode& mode);
Tri known_eq(const CardExpr& a, const CardExpr& b, const AxiomMode& mode);

Cardinal card_add(const Cardinal& a, const Cardinal& b);
Cardinal card_mul(const Cardinal& a, const Cardinal& b);

/// Throws FiniteCardinal for finite input.
Cardinal cofinality(const Cardinal& k);

struct Predicates {
  Tri regular = Tri::Unknown;
  Tri singular = Tri::Unknown;
  Tri successor = Tri::Unknown;
  Tri limit = Tri::Unknown;
  Tri psl = Tri::Unknown;
  Tri strong_limit = Tri::Unknown;
};

Predicates predicates(const Cardinal& k, const AxiomMode& mode);

struct DedBounds {
  Cardinal lower;               // kappa^+
  CardExpr upper;               // 2^kappa
  CardRange upper_value;        // 2^kappa in this mode
  std::optional<Cardinal> exact;
  std::vector<std::string> notes;
};

DedBounds ded_bounds(const Cardinal& k, const AxiomMode& mode);

// ---------------------------------------------------------------------------
// Ring existence.

enum class Answer { Yes, No, Unknown };
const char* to_string(Answer a);

enum class RingKindFilter { Any, Valuation };

struct Verdict {
  Answer answer = Answer::Unknown;
  std::string rule;
  std::string anchor;
  std::vector<std::string> notes;
  std::optional<std::string> witness;
};

/// Is there a ring of cardinality k with Krull dimension l?
Verdict exists_ring(const Cardinal& k, const CardExpr& l, const AxiomMode& mode,
                    RingKindFilter kind = RingKindFilter::Any);

// ---------------------------------------------------------------------------
// Construction catalog.

enum class RingKind { ValuationFromGroup, PolyRing, LpaFromChain, BerryFamily };

struct Quantity {
  /// Symbolic value: `aleph(0)`, `2^aleph(0)`, `3`, `none` ...
  std::string value;
  /// The value evaluated in the axiom mode (equal to `value` when exact).
  std::string resolved;
  std::string justification;
};

struct RingDescriptor {
  RingKind kind = RingKind::ValuationFromGroup;
  std::string text;
  Quantity cardinality;
  Quantity cdim;
  Quantity scdim;
};

/// `valuation(rank, kappa)` where rank is a cardinal or `zlex(n)`/`ztree(n)`;
/// `poly(base, vars)`; `lpa(chain, field)` with chain one of rats, ints,
/// omega, omega_op, chain:n; `berry(kappa)`. Throws UnsupportedDescriptor.
RingDescriptor catalog(std::string_view descriptor, const AxiomMode& mode);

struct PolyWitnessChain {
  /// `P[r]` labels in increasing order.
  std::vector<std::string> primes;
  /// Generators: `<X_q : q < r>`.
  std::vector<std::string> ideals;
  /// witnesses[i] lies in primes[i+1] but not primes[i].
  std::vector<std::string> witnesses;
};

/// Cuts of Q written `q` (everything below q) or `q+` (everything up to q).
PolyWitnessChain witness_chain_poly(const std::vector<std::string>& cuts);

struct Tower {
  std::string symbol;
  std::vector<std::string> stages;
  Tri psl = Tri::True;
  Tri strong_limit = Tri::True;
};

/// k_0 = base, k_{n+1} = 2^{k_n}; the supremum is a strong limit.
Tower strong_limit_tower(const Cardinal& base, std::size_t shown = 3);

}  // namespace krullkit::card
