#include "stabscope/walls.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabscope {

namespace {

// "k*s" with the conventional short forms s, -s, s/2, 3*s/2.
std::string s_term(const Rational& k) {
  const Integer& num = k.get_num();
  const Integer& den = k.get_den();
  std::string out;
  if (num == 1) {
    out = "s";
  } else if (num == -1) {
    out = "-s";
  } else {
    out = num.get_str() + "*s";
  }
  if (den != 1) out += "/" + den.get_str();
  return out;
}

}  // namespace

std::string WallLine::equation() const {
  const Rational& alpha = coeff.ch0;
  const Rational& beta = coeff.ch1;
  const Rational& gamma = coeff.ch2;
  if (gamma == 0) return "s=" + to_string(Rational(-alpha / beta));
  const Rational slope_s = -beta / gamma;
  const Rational constant = -alpha / gamma;
  if (slope_s == 0) return "q=" + to_string(constant);
  std::string out = "q=" + s_term(slope_s);
  if (sgn(constant) > 0) out += "+" + to_string(constant);
  if (sgn(constant) < 0) out += to_string(constant);
  return out;
}

WallLine wall_line(const CharVec& v, const CharVec& w) {
  const CharVec c = cross(v, w);
  if (c.is_zero()) throw std::domain_error("no wall: classes parallel everywhere");
  if (c.ch1 == 0 && c.ch2 == 0) throw std::domain_error("no wall: the locus is the line at infinity");
  return {v, w, c, std::nullopt};
}

std::optional<std::pair<AffPt, AffPt>> clip_to(const CharVec& coeff, const Window& window) {
  const Rational& alpha = coeff.ch0;
  const Rational& beta = coeff.ch1;
  const Rational& gamma = coeff.ch2;
  // Parametrize the line by a point and a direction, then clip the parameter.
  Rational s, q, ds, dq;
  if (gamma != 0) {
    s = 0;
    q = -alpha / gamma;
    ds = 1;
    dq = -beta / gamma;
  } else {
    s = -alpha / beta;
    q = 0;
    ds = 0;
    dq = 1;
  }
  std::optional<Rational> lo, hi;
  auto bound = [&](const Rational& origin, const Rational& dir, const Rational& a, const Rational& b) {
    if (dir == 0) return origin >= a && origin <= b;
    Rational t0 = (a - origin) / dir, t1 = (b - origin) / dir;
    if (t1 < t0) std::swap(t0, t1);
    if (!lo || t0 > *lo) lo = t0;
    if (!hi || t1 < *hi) hi = t1;
    return true;
  };
  if (!bound(s, ds, window.s0, window.s1) || !bound(q, dq, window.q0, window.q1)) return std::nullopt;
  if (!lo || !hi || *hi < *lo) return std::nullopt;
  return std::pair{make_point(s + *lo * ds, q + *lo * dq), make_point(s + *hi * ds, q + *hi * dq)};
}

std::vector<WallLine> walls_for(const CharVec& v, const std::vector<ExcBundle>& pool, const Window& window) {
  std::vector<std::pair<Rational, WallLine>> keyed;
  for (const ExcBundle& e : pool) {
    if (proportional(v, e.chr)) continue;
    WallLine wall = wall_line(v, e.chr);
    wall.clipped = clip_to(wall.coeff, window);
    if (!wall.clipped) continue;
    const Rational key = (wall.coeff.ch1 != 0)
                             ? Rational(-(wall.coeff.ch0 + wall.coeff.ch2 * window.q0) / wall.coeff.ch1)
                             : rational_x(wall.clipped->first);
    keyed.emplace_back(key, std::move(wall));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<WallLine> out;
  out.reserve(keyed.size());
  for (auto& [key, wall] : keyed) out.push_back(std::move(wall));
  return out;
}

}  // namespace stabscope
