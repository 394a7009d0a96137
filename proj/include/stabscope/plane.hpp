#pragma once

// Affine geometry on the {1, ch1/ch0, ch2/ch0}-plane: points with exact
// coordinates, lines, segments with explicit endpoint inclusion, the ray
// order at a base point and exact polygon membership.

#include "stabscope/char_vec.hpp"
#include "stabscope/quad_real.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stabscope {

/// The point (1, x, y): x = ch1/ch0, y = ch2/ch0.
struct AffPt {
  QuadReal x;
  QuadReal y;

  friend bool operator==(const AffPt&, const AffPt&) = default;
};

inline AffPt make_point(const Rational& x, const Rational& y) { return {QuadReal(x), QuadReal(y)}; }

/// Projection of a class with ch0 != 0.
AffPt project(const CharVec& v);

/// Delta = x^2/2 - y at a point.
QuadReal delta_at(const AffPt& p);

/// Both coordinates rational.
bool is_rational(const AffPt& p);
Rational rational_x(const AffPt& p);
Rational rational_y(const AffPt& p);

/// The class (1, x, y); requires rational coordinates.
CharVec lift(const AffPt& p);

/// sign of the cross product (b - a) x (c - a).
int orient(const AffPt& a, const AffPt& b, const AffPt& c);

/// Locus alpha*ch0 + beta*ch1 + gamma*ch2 = 0, defined up to scale.
struct ProjLine {
  QuadReal alpha;
  QuadReal beta;
  QuadReal gamma;

  static ProjLine through(const AffPt& p, const AffPt& q);
  static ProjLine from_classes(const CharVec& v, const CharVec& w);

  bool contains(const AffPt& p) const;
  /// Evaluates alpha + beta*x + gamma*y; the sign tells the side of the line.
  QuadReal eval(const AffPt& p) const;
  /// Same locus (coefficient vectors proportional).
  bool same_as(const ProjLine& other) const;
};

struct Segment {
  AffPt a;
  AffPt b;
  bool include_a = true;
  bool include_b = true;

  bool contains(const AffPt& p) const;
};

struct Ray {
  AffPt base;
  AffPt direction;  // nonzero
  bool include_base = true;
};

enum class RayOrder { Below, Equal, Above };

std::string to_string(RayOrder order);

/// Compares the rays P->A and P->B by the angle they make at P with the
/// downward vertical. Both A and B must lie in the right half-plane H_P
/// (x > x_P, or x = x_P and y > y_P). Throws std::domain_error otherwise.
RayOrder ray_above(const AffPt& p, const AffPt& a, const AffPt& b);

/// True iff q lies in the half-plane H_P.
bool in_right_half_plane(const AffPt& p, const AffPt& q);

/// A polygon with per-edge and per-vertex inclusion flags. Edge i joins
/// vertex i to vertex i+1 (cyclically).
struct Polygon {
  std::vector<AffPt> vertices;
  std::vector<bool> edge_included;
  std::vector<bool> vertex_included;

  static Polygon open(std::vector<AffPt> vertices);
};

/// Exact membership honoring the inclusion flags. Throws std::domain_error
/// for polygons with fewer than three vertices or zero signed area.
bool point_in_polygon(const AffPt& p, const Polygon& polygon);

/// Index of the boundary edge containing p (vertex hits report the edge
/// starting there), or nullopt.
std::optional<std::size_t> boundary_edge_of(const AffPt& p, const Polygon& polygon);

std::string to_string(const AffPt& p);

}  // namespace stabscope
