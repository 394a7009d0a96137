#include "stabscope/lepotier.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace stabscope {

namespace {

const Rational kHalf(1, 2);

// Exact data of one label's two curve pieces.
struct LabelGeom {
  Rational mu;
  Rational y_plus;
  Rational y_e;
  Rational k_left;
  Rational k_right;
  QuadReal xl;
  QuadReal xr;
};

LabelGeom geom(const DyadicLabel& label) {
  const CharVec v = char_of(label);
  LabelGeom g;
  g.mu = v.ch1 / v.ch0;
  g.y_e = v.ch2 / v.ch0;
  g.y_plus = g.y_e - 1 / (v.ch0 * v.ch0);
  const AffPt left = e_point(label.left_neighbor());
  const AffPt right = e_point(label.right_neighbor());
  g.k_left = (rational_y(left) - g.y_plus) / (rational_x(left) - g.mu);
  g.k_right = (rational_y(right) - g.y_plus) / (rational_x(right) - g.mu);
  g.xl = el(label).x;
  g.xr = er(label).x;
  return g;
}

QuadReal curve_y(const LabelGeom& g, const QuadReal& x) {
  const Rational& k = (x <= QuadReal(g.mu)) ? g.k_left : g.k_right;
  return QuadReal(g.y_plus) + QuadReal(k) * (x - QuadReal(g.mu));
}

bool in_interval(const LabelGeom& g, const QuadReal& x) { return g.xl <= x && x <= g.xr; }

// Half-width of the certificate band over the gap whose shallowest label is c.
Rational band_radius(const DyadicLabel& c) {
  const Rational r = char_of(c).ch0;
  return 1 / (2 * r * r);
}

Integer floor_of(const QuadReal& x) {
  if (x.is_rational()) return stabscope::floor_of(x.rational());
  Integer n(std::floor(x.to_double()));
  while (QuadReal(Rational(n)) > x) --n;
  while (QuadReal(Rational(n + 1)) <= x) ++n;
  return n;
}

DyadicLabel integer_label(const Integer& n) {
  if (!n.fits_slong_p()) throw std::domain_error("slope out of range");
  return DyadicLabel::integer(n.get_si());
}

constexpr int kSearchDepthLimit = 60;

// Label whose exclusion segment could contain a point at rational slope x
// with the given Delta < 1/2. Labels in a bracket all have rank >= the rank
// of its midpoint, so the search stops once that rank puts the exclusion's
// Delta range [1/2 - 1/(2r^2), ...] strictly above delta_p.
std::optional<DyadicLabel> exclusion_label_near(const Rational& x, const QuadReal& delta_p, bool* exhausted) {
  const Integer n = stabscope::floor_of(x);
  if (Rational(n) == x) return integer_label(n);
  DyadicLabel a = integer_label(n);
  DyadicLabel b = a + 1;
  for (int level = 1; level <= kSearchDepthLimit; ++level) {
    const DyadicLabel c = midpoint(a, b);
    if (delta_p < QuadReal(kHalf - band_radius(c))) return std::nullopt;
    const Rational mu = slope(char_of(c));
    if (mu == x) return c;
    if (x < mu) {
      b = c;
    } else {
      a = c;
    }
  }
  *exhausted = true;
  return std::nullopt;
}

RegionClass decide_in_label(const LabelGeom& g, const AffPt& p) {
  const QuadReal yc = curve_y(g, p.x);
  if (p.y > yc) {
    if (p.x == QuadReal(g.mu) && p.y <= QuadReal(g.y_e)) return {RegionClass::OnExclusion, 0};
    return {RegionClass::GeoLP, 0};
  }
  if (p.y == yc) return {RegionClass::OnCurve, 0};
  return {RegionClass::BelowCurve, 0};
}

}  // namespace

// ---------------------------------------------------------------------------

CurveSegment left_segment(const DyadicLabel& label) {
  const AffPt top = eplus(label);
  return {el(label), top, ProjLine::through(top, e_point(label.left_neighbor())), label, CurveSide::Left};
}

CurveSegment right_segment(const DyadicLabel& label) {
  const AffPt top = eplus(label);
  return {top, er(label), ProjLine::through(top, e_point(label.right_neighbor())), label, CurveSide::Right};
}

ExclusionSegment exclusion_segment(const DyadicLabel& label) { return {label, e_point(label), eplus(label)}; }

CurveApprox build_curve(int depth, const Rational& lo, const Rational& hi) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  if (hi < lo) throw std::invalid_argument("empty window");
  CurveApprox out;
  out.depth = depth;
  out.lo = lo;
  out.hi = hi;
  const QuadReal qlo(lo), qhi(hi);
  for (const DyadicLabel& label : labels_between(lo - 1, hi + 1, depth)) {
    const CurveSegment left = left_segment(label);
    const CurveSegment right = right_segment(label);
    for (const CurveSegment* s : {&left, &right}) {
      if (s->a.x <= qhi && qlo <= s->b.x) out.segments.push_back(*s);
    }
    const Rational mu = slope(char_of(label));
    if (lo <= mu && mu <= hi) out.exclusions.push_back(exclusion_segment(label));
  }
  // Labels and their curve pieces are already in increasing x order.
  return out;
}

std::string to_string(RegionClass::Kind kind) {
  switch (kind) {
    case RegionClass::GeoLP: return "GeoLP";
    case RegionClass::OnExclusion: return "OnExclusion";
    case RegionClass::OnCurve: return "OnCurve";
    case RegionClass::BelowCurve: return "BelowCurve";
    case RegionClass::Unknown: return "Unknown";
  }
  return "?";
}

RegionClass classify_point(const AffPt& p, int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  const QuadReal d = delta_at(p);
  if (d > QuadReal(1)) return {RegionClass::BelowCurve, 0};

  if (d < QuadReal(kHalf)) {
    if (!p.x.is_rational()) return {RegionClass::GeoLP, 0};
    bool exhausted = false;
    auto label = exclusion_label_near(p.x.rational(), d, &exhausted);
    if (exhausted) return {RegionClass::Unknown, kSearchDepthLimit};
    if (label && p.x == QuadReal(slope(char_of(*label))) && p.y <= e_point(*label).y) {
      return {RegionClass::OnExclusion, 0};
    }
    return {RegionClass::GeoLP, 0};
  }

  // 1/2 <= Delta <= 1: walk down the label tree.
  const Integer n = floor_of(p.x);
  DyadicLabel a = integer_label(n);
  DyadicLabel b = a + 1;
  for (const DyadicLabel& label : {a, b}) {
    const LabelGeom g = geom(label);
    if (in_interval(g, p.x)) return decide_in_label(g, p);
  }
  while (true) {
    const DyadicLabel c = midpoint(a, b);
    if (c.m() > depth) return {RegionClass::Unknown, depth};
    if (d > QuadReal(kHalf + band_radius(c))) return {RegionClass::BelowCurve, 0};
    const LabelGeom g = geom(c);
    if (in_interval(g, p.x)) return decide_in_label(g, p);
    if (p.x < g.xl) {
      b = c;
    } else {
      a = c;
    }
  }
}

std::string to_string(Existence e) {
  switch (e) {
    case Existence::YesExceptional: return "YesExceptional";
    case Existence::Yes: return "Yes";
    case Existence::No: return "No";
    case Existence::Unknown: return "Unknown";
  }
  return "?";
}

Existence dlp_exists(const CharVec& v, int depth) {
  if (v.ch0 <= 0) throw std::invalid_argument("theorem hypothesis violated: ch0 must be positive");
  if (is_exceptional_char(v, depth)) return Existence::YesExceptional;
  switch (classify_point(project(v), depth).kind) {
    case RegionClass::BelowCurve:
    case RegionClass::OnCurve: return Existence::Yes;
    case RegionClass::GeoLP:
    case RegionClass::OnExclusion: return Existence::No;
    case RegionClass::Unknown: return Existence::Unknown;
  }
  return Existence::Unknown;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Segment containment

namespace {

// An x-range with explicit endpoint inclusion.
struct XRange {
  QuadReal lo;
  QuadReal hi;
  bool incl_lo = true;
  bool incl_hi = true;

  bool empty() const { return hi < lo || (lo == hi && !(incl_lo && incl_hi)); }
  bool contains(const QuadReal& x) const {
    if (x < lo || hi < x) return false;
    if (x == lo && !incl_lo) return false;
    if (x == hi && !incl_hi) return false;
    return true;
  }
};

// Intersection with the closed interval [p, q] (closed = true) or the open
// interval (p, q).
XRange clip(const XRange& r, const QuadReal& p, const QuadReal& q, bool closed) {
  XRange out;
  if (r.lo < p) {
    out.lo = p;
    out.incl_lo = closed;
  } else if (r.lo == p) {
    out.lo = p;
    out.incl_lo = r.incl_lo && closed;
  } else {
    out.lo = r.lo;
    out.incl_lo = r.incl_lo;
  }
  if (q < r.hi) {
    out.hi = q;
    out.incl_hi = closed;
  } else if (q == r.hi) {
    out.hi = q;
    out.incl_hi = r.incl_hi && closed;
  } else {
    out.hi = r.hi;
    out.incl_hi = r.incl_hi;
  }
  return out;
}

Verdict combine(Verdict x, Verdict y) {
  if (x == Verdict::No || y == Verdict::No) return Verdict::No;
  if (x == Verdict::Unknown || y == Verdict::Unknown) return Verdict::Unknown;
  return Verdict::Yes;
}

// The non-vertical segment y = y0 + k (x - x0) restricted to x-ranges.
class SegmentCheck {
 public:
  SegmentCheck(Rational x0, Rational y0, Rational k, int depth)
      : x0_(std::move(x0)), y0_(std::move(y0)), k_(std::move(k)), depth_(depth) {}

  Verdict run(const XRange& span) const {
    const Integer first = floor_of(span.lo) - 1;
    const Integer last = floor_of(span.hi) + 1;
    Verdict out = Verdict::Yes;
    for (Integer n = first; n <= last; ++n) {
      const DyadicLabel a = integer_label(n);
      const DyadicLabel b = a + 1;
      const LabelGeom ga = geom(a), gb = geom(b);
      out = combine(out, label_cell(ga, clip(span, ga.xl, ga.xr, true)));
      if (out == Verdict::No) return out;
      out = combine(out, gap_cell(a, b, clip(span, ga.xr, gb.xl, false)));
      if (out == Verdict::No) return out;
    }
    return out;
  }

 private:
  QuadReal y_at(const QuadReal& x) const { return QuadReal(y0_) + QuadReal(k_) * (x - QuadReal(x0_)); }
  QuadReal delta_at_x(const QuadReal& x) const { return x * x / QuadReal(2) - y_at(x); }

  // The segment stays strictly above the line y = yp + kc (x - mu) on r.
  bool above_line(const XRange& r, const Rational& mu, const Rational& yp, const Rational& kc) const {
    auto g = [&](const QuadReal& x) { return (y_at(x) - (QuadReal(yp) + QuadReal(kc) * (x - QuadReal(mu)))).sign(); };
    const int g_lo = g(r.lo), g_hi = g(r.hi);
    if (r.lo == r.hi) return g_lo > 0;
    if (g_lo < 0 || g_hi < 0) return false;
    if (r.incl_lo && g_lo == 0) return false;
    if (r.incl_hi && g_hi == 0) return false;
    return g_lo > 0 || g_hi > 0;
  }

  Verdict label_cell(const LabelGeom& g, const XRange& r) const {
    if (r.empty()) return Verdict::Yes;
    const QuadReal mu(g.mu);
    const XRange left = clip(r, r.lo, min(r.hi, mu), true);
    const XRange right = clip(r, max(r.lo, mu), r.hi, true);
    if (!left.empty() && !above_line(left, g.mu, g.y_plus, g.k_left)) return Verdict::No;
    if (!right.empty() && !above_line(right, g.mu, g.y_plus, g.k_right)) return Verdict::No;
    if (r.contains(mu) && y_at(mu) <= QuadReal(g.y_e)) return Verdict::No;
    return Verdict::Yes;
  }

  Verdict gap_cell(const DyadicLabel& a, const DyadicLabel& b, const XRange& r) const {
    if (r.empty()) return Verdict::Yes;
    const DyadicLabel c = midpoint(a, b);
    const Rational radius = band_radius(c);
    // Delta along the segment is convex in x with its minimum at x = k.
    const QuadReal d_lo = delta_at_x(r.lo), d_hi = delta_at_x(r.hi);
    if (max(d_lo, d_hi) < QuadReal(kHalf - radius)) return Verdict::Yes;
    const QuadReal xk(k_);
    const QuadReal d_min = (xk <= r.lo) ? d_lo : (r.hi <= xk) ? d_hi : delta_at_x(xk);
    if (d_min > QuadReal(kHalf + radius)) return Verdict::No;
    if (c.m() > depth_) return Verdict::Unknown;
    const LabelGeom gc = geom(c);
    const LabelGeom ga = geom(a), gb = geom(b);
    Verdict out = gap_cell(a, c, clip(r, ga.xr, gc.xl, false));
    if (out == Verdict::No) return out;
    out = combine(out, label_cell(gc, clip(r, gc.xl, gc.xr, true)));
    if (out == Verdict::No) return out;
    return combine(out, gap_cell(c, b, clip(r, gc.xr, gb.xl, false)));
  }

  Rational x0_, y0_, k_;
  int depth_;
};

// Vertical segment at x with y in [ylo, yhi]; the lowest point decides.
Verdict vertical_check(const Rational& x, const Rational& ylo, const Rational& yhi, bool incl_lo, int depth) {
  const QuadReal qx(x);
  auto in_label = [&](const LabelGeom& g) {
    const QuadReal yc = curve_y(g, qx);
    const QuadReal lo(ylo);
    if (lo < yc || (lo == yc && incl_lo)) return Verdict::No;
    if (x == g.mu) {
      if (ylo < g.y_e || (ylo == g.y_e && incl_lo)) return Verdict::No;
    }
    return Verdict::Yes;
  };
  const Integer n = stabscope::floor_of(x);
  DyadicLabel a = integer_label(n);
  DyadicLabel b = a + 1;
  for (const DyadicLabel& label : {a, b}) {
    const LabelGeom g = geom(label);
    if (in_interval(g, qx)) return in_label(g);
  }
  // Delta on a vertical segment is largest at the lowest point.
  const Rational d_low = x * x / 2 - ylo;
  while (true) {
    const DyadicLabel c = midpoint(a, b);
    const Rational radius = band_radius(c);
    if (d_low < kHalf - radius) return Verdict::Yes;
    if (d_low > kHalf + radius && (incl_lo || ylo < yhi)) return Verdict::No;
    if (c.m() > depth) return Verdict::Unknown;
    const LabelGeom g = geom(c);
    if (in_interval(g, qx)) return in_label(g);
    if (qx < g.xl) {
      b = c;
    } else {
      a = c;
    }
  }
}

}  // namespace

Verdict geo_contains_segment(const AffPt& a, const AffPt& b, int depth, bool exclude_a) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  if (a == b) throw std::invalid_argument("segment endpoints coincide");
  if (!is_rational(a) || !is_rational(b)) throw std::domain_error("segment endpoints must be rational");

  const QuadReal da = delta_at(a), db = delta_at(b);
  const QuadReal zero(0);
  // Delta is convex, so the segment (minus A if excluded) stays in Delta < 0.
  if (db < zero && (da < zero || (exclude_a && da == zero))) return Verdict::Yes;

  const Rational ax = rational_x(a), ay = rational_y(a), bx = rational_x(b), by = rational_y(b);
  if (ax == bx) {
    // Only the lowest point matters, and whether it is omitted.
    if (ay < by) return vertical_check(ax, ay, by, !exclude_a, depth);
    return vertical_check(ax, by, ay, true, depth);
  }
  const Rational k = (by - ay) / (bx - ax);
  SegmentCheck check(ax, ay, k, depth);
  XRange span;
  if (ax < bx) {
    span = {QuadReal(ax), QuadReal(bx), !exclude_a, true};
  } else {
    span = {QuadReal(bx), QuadReal(ax), true, !exclude_a};
  }
  return check.run(span);
}

}  // namespace stabscope
