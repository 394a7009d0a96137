#pragma once

// Exceptional bundles on the plane, indexed by dyadic labels p/2^m.
//
// Characters follow the three-term recursion on labels:
//   p = 3 (mod 4):  v(p/2^m) = 3 r((p+1)/2^m) v((p-1)/2^m) - v((p-3)/2^m)
//   p = 1 (mod 4):  v(p/2^m) = 3 r((p-1)/2^m) v((p+1)/2^m) - v((p+3)/2^m)
// with v(n) = (1, n, n^2/2) for integers n. Results are memoized.

#include "stabscope/char_vec.hpp"
#include "stabscope/plane.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stabscope {

/// The dyadic number p/2^m in canonical form (m = 0 or p odd).
class DyadicLabel {
 public:
  DyadicLabel() = default;
  DyadicLabel(std::int64_t p, int m);  // reduces to canonical form
  static DyadicLabel integer(std::int64_t n) { return DyadicLabel(n, 0); }
  /// Throws ParseError unless the denominator is a power of two.
  static DyadicLabel from_rational(const Rational& value);
  /// Accepts "p", "p/q" with q a power of two, and "p/2^m".
  static DyadicLabel parse(std::string_view text);

  std::int64_t p() const { return p_; }
  int m() const { return m_; }
  Rational value() const;

  DyadicLabel operator+(std::int64_t k) const;
  DyadicLabel operator-(std::int64_t k) const { return *this + (-k); }

  /// Neighbors (p-1)/2^m and (p+1)/2^m, reduced.
  DyadicLabel left_neighbor() const { return DyadicLabel(p_ - 1, m_); }
  DyadicLabel right_neighbor() const { return DyadicLabel(p_ + 1, m_); }

  friend bool operator==(const DyadicLabel&, const DyadicLabel&) = default;
  friend std::strong_ordering operator<=>(const DyadicLabel& x, const DyadicLabel& y);

  std::string str() const;

 private:
  std::int64_t p_ = 0;
  int m_ = 0;
};

/// Midpoint label of a < b; both at depth <= m with b - a = 2^-m.
DyadicLabel midpoint(const DyadicLabel& a, const DyadicLabel& b);

/// Character of the exceptional bundle E_(label).
CharVec char_of(const DyadicLabel& label);

/// Rank of E_(label) as an integer.
Integer rank_of(const DyadicLabel& label);

/// char_of(label) twisted k times by O(1); equals char_of(label + k).
CharVec twist(const DyadicLabel& label, std::int64_t k);

struct ExcBundle {
  DyadicLabel label;
  CharVec chr;

  static ExcBundle of(const DyadicLabel& label) { return {label, char_of(label)}; }
};

/// e(label) = v / ch0.
AffPt e_point(const DyadicLabel& label);
/// e(label) - (0, 0, 1/r^2).
AffPt eplus(const DyadicLabel& label);
/// Intersection of Delta_{1/2} with the segment from e+(label) to
/// e(left neighbor).
AffPt el(const DyadicLabel& label);
/// Same, toward e(right neighbor).
AffPt er(const DyadicLabel& label);

enum class TriplePattern { Adjacent, RightExtended, LeftExtended };

std::string to_string(TriplePattern pattern);
TriplePattern parse_pattern(std::string_view text);

/// Labels {l1, l2, l3} of the pattern instantiated at `base`.
std::array<DyadicLabel, 3> pattern_labels(TriplePattern pattern, const DyadicLabel& base);

struct ExcTriple {
  std::array<ExcBundle, 3> bundles;
  TriplePattern pattern = TriplePattern::Adjacent;
  DyadicLabel base;

  const ExcBundle& operator[](std::size_t i) const { return bundles[i]; }
  std::array<DyadicLabel, 3> labels() const {
    return {bundles[0].label, bundles[1].label, bundles[2].label};
  }
  std::array<CharVec, 3> chars() const { return {bundles[0].chr, bundles[1].chr, bundles[2].chr}; }

  friend bool operator==(const ExcTriple& x, const ExcTriple& y) { return x.labels() == y.labels(); }
};

/// Builds the triple and checks every numerical invariant; a failure throws
/// InvariantError.
ExcTriple triple_from(TriplePattern pattern, const DyadicLabel& base);

/// Finds a pattern and base producing exactly these labels (Adjacent is
/// preferred, then RightExtended, then LeftExtended).
std::optional<std::pair<TriplePattern, DyadicLabel>> identify_pattern(const std::array<DyadicLabel, 3>& labels);

/// Throws InvariantError if the triple violates chi-vanishing, collinearity
/// or |det3| = 1.
void check_triple_invariants(const ExcTriple& t);

enum class MutationSlot { Second, First };  // positions 2-3 (default) or 1-2

/// Positions 2-3: <E1, L_{E2}E3, E2>, middle class chi(E2,E3) v(E2) - v(E3).
/// Positions 1-2: <L_{E1}E2, E1, E3>, class chi(E1,E2) v(E1) - v(E2).
ExcTriple mutate_left(const ExcTriple& t, MutationSlot slot = MutationSlot::Second);
/// Positions 2-3: <E1, E3, R_{E3}E2>, class chi(E2,E3) v(E3) - v(E2).
/// Positions 1-2: <E2, R_{E2}E1, E3>, class chi(E1,E2) v(E2) - v(E1).
ExcTriple mutate_right(const ExcTriple& t, MutationSlot slot = MutationSlot::Second);

/// The label whose exceptional slope equals mu, searching depths <= max_m.
std::optional<DyadicLabel> slope_to_label(const Rational& mu, int max_m);

/// True iff v is a positive multiple of char_of(label) with depth <= max_m.
bool is_exceptional_char(const CharVec& v, int max_m);

/// All labels of depth <= max_m with lo <= value <= hi, sorted.
std::vector<DyadicLabel> labels_between(const Rational& lo, const Rational& hi, int max_m);

}  // namespace stabscope
