#include "stabscope/exceptional.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace stabscope {

namespace {

constexpr int kMaxLabelDepth = 62;

// Build-once, read-mostly memo keyed by canonical (p, m).
template <typename Value>
class LabelMemo {
 public:
  template <typename Compute>
  Value get(const DyadicLabel& label, Compute&& compute) {
    const std::pair<std::int64_t, int> key{label.p(), label.m()};
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<std::int64_t, int>, Value> table_;
};

LabelMemo<CharVec>& char_memo() {
  static LabelMemo<CharVec> memo;
  return memo;
}

LabelMemo<std::pair<AffPt, AffPt>>& side_point_memo() {
  static LabelMemo<std::pair<AffPt, AffPt>> memo;
  return memo;
}

std::int64_t mod4(std::int64_t p) { return ((p % 4) + 4) % 4; }

CharVec compute_char(const DyadicLabel& label) {
  const std::int64_t p = label.p();
  const int m = label.m();
  if (m == 0) return line_bundle(Rational(static_cast<long>(p)));
  if (mod4(p) == 3) {
    Rational r = char_of(DyadicLabel(p + 1, m)).ch0;
    return 3 * r * char_of(DyadicLabel(p - 1, m)) - char_of(DyadicLabel(p - 3, m));
  }
  Rational r = char_of(DyadicLabel(p - 1, m)).ch0;
  return 3 * r * char_of(DyadicLabel(p + 1, m)) - char_of(DyadicLabel(p + 3, m));
}

// Intersection of Delta_{1/2} with the segment from `from` (Delta > 1/2) to
// `to` (Delta < 1/2). The root is picked by segment membership.
AffPt half_parabola_crossing(const AffPt& from, const AffPt& to) {
  const Rational x0 = rational_x(from), y0 = rational_y(from);
  const Rational x1 = rational_x(to), y1 = rational_y(to);
  if (x0 == x1) throw InvariantError("vertical e+ segment");
  const Rational k = (y1 - y0) / (x1 - x0);
  // x^2 / 2 - (y0 + k (x - x0)) = 1/2  <=>  x^2 - 2 k x + (2 k x0 - 2 y0 - 1) = 0
  const Rational disc = k * k - 2 * k * x0 + 2 * y0 + 1;
  if (disc <= 0) throw InvariantError("e+ segment misses Delta_{1/2}");
  const QuadReal root = QuadReal::sqrt(disc);
  const QuadReal lo = min(QuadReal(x0), QuadReal(x1));
  const QuadReal hi = max(QuadReal(x0), QuadReal(x1));
  std::optional<QuadReal> chosen;
  for (const QuadReal& x : {QuadReal(k) + root, QuadReal(k) - root}) {
    if (lo <= x && x <= hi) {
      if (chosen && !(*chosen == x)) throw InvariantError("two Delta_{1/2} crossings on an e+ segment");
      chosen = x;
    }
  }
  if (!chosen) throw InvariantError("no Delta_{1/2} crossing on an e+ segment");
  AffPt p{*chosen, QuadReal(y0) + QuadReal(k) * (*chosen - QuadReal(x0))};
  if (!(delta_at(p) == QuadReal(Rational(1, 2)))) throw InvariantError("crossing off Delta_{1/2}");
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// DyadicLabel

DyadicLabel::DyadicLabel(std::int64_t p, int m) : p_(p), m_(m) {
  if (m_ < 0) throw ParseError("dyadic label with negative exponent");
  while (m_ > 0 && p_ % 2 == 0) {
    p_ /= 2;
    --m_;
  }
  if (m_ > kMaxLabelDepth) throw ParseError("dyadic label too deep");
}

DyadicLabel DyadicLabel::from_rational(const Rational& value) {
  const Integer& den = value.get_den();
  if (mpz_popcount(den.get_mpz_t()) != 1) throw ParseError("label denominator is not a power of two");
  int m = static_cast<int>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 1;
  if (!value.get_num().fits_slong_p()) throw ParseError("label numerator too large");
  return DyadicLabel(value.get_num().get_si(), m);
}

DyadicLabel DyadicLabel::parse(std::string_view text) {
  if (auto caret = text.find("/2^"); caret != std::string_view::npos) {
    Rational p = parse_rational(text.substr(0, caret));
    std::string exp(text.substr(caret + 3));
    if (exp.empty() || p.get_den() != 1) throw ParseError("malformed label: '" + std::string(text) + "'");
    for (char c : exp) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("malformed label: '" + std::string(text) + "'");
    }
    int m = std::stoi(exp);
    if (!p.get_num().fits_slong_p()) throw ParseError("label numerator too large");
    return DyadicLabel(p.get_num().get_si(), m);
  }
  return from_rational(parse_rational(text));
}

Rational DyadicLabel::value() const {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(m_));
  Rational r(Integer(static_cast<long>(p_)), den);
  r.canonicalize();
  return r;
}

DyadicLabel DyadicLabel::operator+(std::int64_t k) const {
  __int128 shifted = static_cast<__int128>(k) << m_;
  __int128 sum = static_cast<__int128>(p_) + shifted;
  if (sum > INT64_MAX || sum < INT64_MIN) throw ParseError("dyadic label overflow");
  return DyadicLabel(static_cast<std::int64_t>(sum), m_);
}

std::strong_ordering operator<=>(const DyadicLabel& x, const DyadicLabel& y) {
  int c = cmp(x.value(), y.value());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string DyadicLabel::str() const { return to_string(value()); }

DyadicLabel midpoint(const DyadicLabel& a, const DyadicLabel& b) {
  return DyadicLabel::from_rational((a.value() + b.value()) / 2);
}

// ---------------------------------------------------------------------------
// Characters and associated points

CharVec char_of(const DyadicLabel& label) {
  return char_memo().get(label, [&] { return compute_char(label); });
}

Integer rank_of(const DyadicLabel& label) {
  const Rational r = char_of(label).ch0;
  return r.get_num();
}

CharVec twist(const DyadicLabel& label, std::int64_t k) {
  return twist_char(char_of(label), Rational(static_cast<long>(k)));
}

AffPt e_point(const DyadicLabel& label) { return project(char_of(label)); }

AffPt eplus(const DyadicLabel& label) {
  const CharVec v = char_of(label);
  return make_point(v.ch1 / v.ch0, v.ch2 / v.ch0 - 1 / (v.ch0 * v.ch0));
}

namespace {

std::pair<AffPt, AffPt> side_points(const DyadicLabel& label) {
  return side_point_memo().get(label, [&] {
    const AffPt top = eplus(label);
    return std::pair{half_parabola_crossing(top, e_point(label.left_neighbor())),
                     half_parabola_crossing(top, e_point(label.right_neighbor()))};
  });
}

}  // namespace

AffPt el(const DyadicLabel& label) { return side_points(label).first; }
AffPt er(const DyadicLabel& label) { return side_points(label).second; }

// ---------------------------------------------------------------------------
// Triples

std::string to_string(TriplePattern pattern) {
  switch (pattern) {
    case TriplePattern::Adjacent: return "adj";
    case TriplePattern::RightExtended: return "right";
    case TriplePattern::LeftExtended: return "left";
  }
  return "?";
}

TriplePattern parse_pattern(std::string_view text) {
  if (text == "adj" || text == "adjacent") return TriplePattern::Adjacent;
  if (text == "right") return TriplePattern::RightExtended;
  if (text == "left") return TriplePattern::LeftExtended;
  throw ParseError("unknown triple pattern: '" + std::string(text) + "'");
}

std::array<DyadicLabel, 3> pattern_labels(TriplePattern pattern, const DyadicLabel& base) {
  const std::int64_t p = base.p();
  const int m = base.m();
  const DyadicLabel lower(p - 1, m);
  const DyadicLabel upper(p + 1, m);
  switch (pattern) {
    case TriplePattern::Adjacent: return {lower, base, upper};
    case TriplePattern::RightExtended: return {base, upper, lower + 3};
    case TriplePattern::LeftExtended: return {upper - 3, lower, base};
  }
  throw InvariantError("unknown pattern");
}

void check_triple_invariants(const ExcTriple& t) {
  const auto c = t.chars();
  if (euler_chi(c[1], c[0]) != 0 || euler_chi(c[2], c[0]) != 0 || euler_chi(c[2], c[1]) != 0)
    throw InvariantError("triple violates chi(E_j, E_i) = 0 for j > i");
  const Rational d = det3(c[0], c[1], c[2]);
  if (d != 1 && d != -1) throw InvariantError("triple characters are not a basis");
  const auto labels = t.labels();
  if (orient(eplus(labels[0]), e_point(labels[1]), e_point(labels[2])) != 0)
    throw InvariantError("e+_1, e_2, e_3 not collinear");
  if (orient(eplus(labels[2]), e_point(labels[1]), e_point(labels[0])) != 0)
    throw InvariantError("e+_3, e_2, e_1 not collinear");
}

ExcTriple triple_from(TriplePattern pattern, const DyadicLabel& base) {
  const auto labels = pattern_labels(pattern, base);
  ExcTriple t{{ExcBundle::of(labels[0]), ExcBundle::of(labels[1]), ExcBundle::of(labels[2])}, pattern, base};
  check_triple_invariants(t);
  return t;
}

std::optional<std::pair<TriplePattern, DyadicLabel>> identify_pattern(const std::array<DyadicLabel, 3>& labels) {
  const std::array<std::pair<TriplePattern, DyadicLabel>, 3> candidates{{
      {TriplePattern::Adjacent, labels[1]},
      {TriplePattern::RightExtended, labels[0]},
      {TriplePattern::LeftExtended, labels[2]},
  }};
  for (const auto& [pattern, base] : candidates) {
    if (pattern_labels(pattern, base) == labels) return std::pair{pattern, base};
  }
  return std::nullopt;
}

namespace {

int deepest(const ExcTriple& t) {
  int m = 0;
  for (const auto& b : t.bundles) m = std::max(m, b.label.m());
  return m;
}

ExcBundle bundle_for_class(const CharVec& v, int max_m) {
  if (v.ch0 <= 0) throw InvariantError("not an exceptional triple: mutation produced a non-positive rank");
  auto label = slope_to_label(slope(v), max_m);
  if (!label || char_of(*label) != v) throw InvariantError("not an exceptional triple: mutated class is not exceptional");
  return {*label, v};
}

ExcTriple assemble(const std::array<ExcBundle, 3>& bundles) {
  std::array<DyadicLabel, 3> labels{bundles[0].label, bundles[1].label, bundles[2].label};
  auto match = identify_pattern(labels);
  if (!match) throw InvariantError("not an exceptional triple");
  ExcTriple t = triple_from(match->first, match->second);
  for (std::size_t i = 0; i < 3; ++i) {
    if (t.bundles[i].chr != bundles[i].chr) throw InvariantError("not an exceptional triple: character mismatch");
  }
  return t;
}

}  // namespace

ExcTriple mutate_left(const ExcTriple& t, MutationSlot slot) {
  const int max_m = std::min(deepest(t) + 4, kMaxLabelDepth);
  const auto c = t.chars();
  if (slot == MutationSlot::Second) {
    CharVec mid = euler_chi(c[1], c[2]) * c[1] - c[2];
    return assemble({t.bundles[0], bundle_for_class(mid, max_m), t.bundles[1]});
  }
  CharVec first = euler_chi(c[0], c[1]) * c[0] - c[1];
  return assemble({bundle_for_class(first, max_m), t.bundles[0], t.bundles[2]});
}

ExcTriple mutate_right(const ExcTriple& t, MutationSlot slot) {
  const int max_m = std::min(deepest(t) + 4, kMaxLabelDepth);
  const auto c = t.chars();
  if (slot == MutationSlot::Second) {
    CharVec last = euler_chi(c[1], c[2]) * c[2] - c[1];
    return assemble({t.bundles[0], t.bundles[2], bundle_for_class(last, max_m)});
  }
  CharVec mid = euler_chi(c[0], c[1]) * c[1] - c[0];
  return assemble({t.bundles[1], bundle_for_class(mid, max_m), t.bundles[2]});
}

// ---------------------------------------------------------------------------
// Slope search

std::optional<DyadicLabel> slope_to_label(const Rational& mu, int max_m) {
  if (max_m < 0) throw std::invalid_argument("max_m must be nonnegative");
  const Integer n = floor_of(mu);
  if (!n.fits_slong_p()) return std::nullopt;
  DyadicLabel a = DyadicLabel::integer(n.get_si());
  if (Rational(n) == mu) return a;
  DyadicLabel b = a + 1;
  for (int depth = 1; depth <= std::min(max_m, kMaxLabelDepth); ++depth) {
    DyadicLabel c = midpoint(a, b);
    int s = cmp(slope(char_of(c)), mu);
    if (s == 0) return c;
    if (s < 0) {
      a = c;
    } else {
      b = c;
    }
  }
  return std::nullopt;
}

bool is_exceptional_char(const CharVec& v, int max_m) {
  if (v.ch0 <= 0) return false;
  auto label = slope_to_label(slope(v), max_m);
  if (!label) return false;
  return proportional(v, char_of(*label));
}

std::vector<DyadicLabel> labels_between(const Rational& lo, const Rational& hi, int max_m) {
  std::vector<DyadicLabel> out;
  if (hi < lo) return out;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(max_m));
  Rational lo_scaled = lo * Rational(scale);
  Rational hi_scaled = hi * Rational(scale);
  Integer first = -floor_of(-lo_scaled);  // ceil
  Integer last = floor_of(hi_scaled);
  for (Integer k = first; k <= last; ++k) {
    out.emplace_back(k.get_si(), max_m);
  }
  return out;
}

}  // namespace stabscope
