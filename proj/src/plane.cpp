#include "stabscope/plane.hpp"

#include <stdexcept>

namespace stabscope {

AffPt project(const CharVec& v) {
  if (v.ch0 == 0) throw std::domain_error("class at infinity has no affine projection");
  return make_point(v.ch1 / v.ch0, v.ch2 / v.ch0);
}

QuadReal delta_at(const AffPt& p) { return p.x * p.x / QuadReal(2) - p.y; }

bool is_rational(const AffPt& p) { return p.x.is_rational() && p.y.is_rational(); }
Rational rational_x(const AffPt& p) { return p.x.rational(); }
Rational rational_y(const AffPt& p) { return p.y.rational(); }

CharVec lift(const AffPt& p) { return {Rational(1), p.x.rational(), p.y.rational()}; }

int orient(const AffPt& a, const AffPt& b, const AffPt& c) {
  QuadReal v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return v.sign();
}

ProjLine ProjLine::through(const AffPt& p, const AffPt& q) {
  if (p == q) throw std::domain_error("line through coincident points");
  // (1, px, py) x (1, qx, qy)
  return {p.x * q.y - p.y * q.x, p.y - q.y, q.x - p.x};
}

ProjLine ProjLine::from_classes(const CharVec& v, const CharVec& w) {
  CharVec c = cross(v, w);
  if (c.is_zero()) throw std::domain_error("line through proportional classes");
  return {QuadReal(c.ch0), QuadReal(c.ch1), QuadReal(c.ch2)};
}

QuadReal ProjLine::eval(const AffPt& p) const { return alpha + beta * p.x + gamma * p.y; }

bool ProjLine::contains(const AffPt& p) const { return eval(p).sign() == 0; }

bool ProjLine::same_as(const ProjLine& o) const {
  return (alpha * o.beta - beta * o.alpha).sign() == 0 && (alpha * o.gamma - gamma * o.alpha).sign() == 0 &&
         (beta * o.gamma - gamma * o.beta).sign() == 0;
}

bool Segment::contains(const AffPt& p) const {
  if (p == a) return include_a;
  if (p == b) return include_b;
  if (orient(a, b, p) != 0) return false;
  // Strictly between a and b along the supporting line.
  QuadReal dot = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
  QuadReal len = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
  return dot.sign() > 0 && dot < len;
}

std::string to_string(RayOrder order) {
  switch (order) {
    case RayOrder::Below: return "Below";
    case RayOrder::Equal: return "Equal";
    case RayOrder::Above: return "Above";
  }
  return "?";
}

bool in_right_half_plane(const AffPt& p, const AffPt& q) {
  int sx = (q.x - p.x).sign();
  return sx > 0 || (sx == 0 && (q.y - p.y).sign() > 0);
}

RayOrder ray_above(const AffPt& p, const AffPt& a, const AffPt& b) {
  if (a == p || b == p) throw std::domain_error("ray endpoint coincides with base point");
  if (!in_right_half_plane(p, a) || !in_right_half_plane(p, b))
    throw std::domain_error("ray outside the right half-plane H_P");
  // a is above b iff a is counterclockwise of b as seen from p.
  int s = orient(p, b, a);
  if (s > 0) return RayOrder::Above;
  if (s < 0) return RayOrder::Below;
  return RayOrder::Equal;
}

Polygon Polygon::open(std::vector<AffPt> vertices) {
  Polygon poly;
  std::size_t n = vertices.size();
  poly.vertices = std::move(vertices);
  poly.edge_included.assign(n, false);
  poly.vertex_included.assign(n, false);
  return poly;
}

namespace {

void require_nondegenerate(const Polygon& polygon) {
  const auto& v = polygon.vertices;
  if (v.size() < 3 || polygon.edge_included.size() != v.size() || polygon.vertex_included.size() != v.size())
    throw std::domain_error("degenerate polygon");
  QuadReal area2(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const AffPt& p = v[i];
    const AffPt& q = v[(i + 1) % v.size()];
    area2 = area2 + (p.x * q.y - q.x * p.y);
  }
  if (area2.sign() == 0) throw std::domain_error("degenerate polygon");
}

}  // namespace

std::optional<std::size_t> boundary_edge_of(const AffPt& p, const Polygon& polygon) {
  const auto& v = polygon.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Segment edge{v[i], v[(i + 1) % v.size()], true, true};
    if (edge.contains(p)) return i;
  }
  return std::nullopt;
}

bool point_in_polygon(const AffPt& p, const Polygon& polygon) {
  require_nondegenerate(polygon);
  const auto& v = polygon.vertices;
  const std::size_t n = v.size();

  for (std::size_t i = 0; i < n; ++i) {
    if (p == v[i]) return polygon.vertex_included[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    Segment edge{v[i], v[(i + 1) % n], false, false};
    if (edge.contains(p)) return polygon.edge_included[i];
  }

  // Winding number; p is known not to lie on the boundary.
  int winding = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const AffPt& a = v[i];
    const AffPt& b = v[(i + 1) % n];
    bool a_below = a.y <= p.y;
    bool b_below = b.y <= p.y;
    if (a_below && !b_below) {
      if (orient(a, b, p) > 0) ++winding;
    } else if (!a_below && b_below) {
      if (orient(a, b, p) < 0) --winding;
    }
  }
  return winding != 0;
}

std::string to_string(const AffPt& p) { return "(" + p.x.str() + "," + p.y.str() + ")"; }

}  // namespace stabscope
