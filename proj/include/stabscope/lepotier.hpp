#pragma once

// The Le Potier curve, built to a finite label depth.
//
// Around each exceptional slope mu(L) the curve is two straight pieces:
// e^l(L) -> e+(L) on the line through e+(L) and e(left neighbor), and
// e+(L) -> e^r(L) toward e(right neighbor). The closed x-intervals
// [x(e^l(L)), x(e^r(L))] are pairwise disjoint and nest along the label tree:
// the open gap between consecutive depth-m labels a < b contains exactly the
// intervals of the labels strictly between them, the shallowest of which is
// the midpoint c = (a+b)/2, which also has the smallest rank there. Every
// curve point, exclusion segment and accumulation point above that gap
// therefore lies in the band |Delta - 1/2| <= 1/(2 r_c^2); that band is the
// certificate used to decide points and segments without descending further.

#include "stabscope/exceptional.hpp"

#include <string>
#include <vector>

namespace stabscope {

enum class CurveSide { Left, Right };

struct CurveSegment {
  AffPt a;  // smaller x
  AffPt b;
  ProjLine line;
  DyadicLabel label;
  CurveSide side = CurveSide::Left;
};

/// Vertical segment from e(label) down to e+(label), both ends included.
struct ExclusionSegment {
  DyadicLabel label;
  AffPt top;
  AffPt bottom;
};

struct CurveApprox {
  int depth = 0;
  Rational lo;
  Rational hi;
  std::vector<CurveSegment> segments;      // sorted by x of the left endpoint
  std::vector<ExclusionSegment> exclusions;  // sorted by x
};

/// Segments of every label with depth <= `depth` and value within one unit
/// of [lo, hi] whose x-extent meets [lo, hi]; exclusions with x in [lo, hi].
CurveApprox build_curve(int depth, const Rational& lo, const Rational& hi);

/// The two curve pieces of one label.
CurveSegment left_segment(const DyadicLabel& label);
CurveSegment right_segment(const DyadicLabel& label);
ExclusionSegment exclusion_segment(const DyadicLabel& label);

struct RegionClass {
  enum Kind { GeoLP, OnExclusion, OnCurve, BelowCurve, Unknown };
  Kind kind = Unknown;
  int depth_reached = 0;  // meaningful for Unknown

  friend bool operator==(const RegionClass&, const RegionClass&) = default;
};

std::string to_string(RegionClass::Kind kind);

RegionClass classify_point(const AffPt& p, int depth);

enum class Existence { YesExceptional, Yes, No, Unknown };

std::string to_string(Existence e);

/// Whether a Gieseker semistable sheaf with this character exists.
/// Throws std::invalid_argument when ch0 <= 0.
Existence dlp_exists(const CharVec& v, int depth);

enum class Verdict { Yes, No, Unknown };

std::string to_string(Verdict v);

/// Whether the segment from A to B (A omitted when exclude_a) lies in
/// Geo_LP. Endpoints must have rational coordinates and differ.
Verdict geo_contains_segment(const AffPt& a, const AffPt& b, int depth, bool exclude_a);

}  // namespace stabscope
