#pragma once

// Walls: the kernel points (1, s, q) at which Z(v) and Z(w) are real
// proportional. They are exactly the points coplanar with v and w, i.e. the
// line det((1, s, q), v, w) = 0, whose coefficients are v x w.

#include "stabscope/exceptional.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stabscope {

struct Window {
  Rational s0, s1, q0, q1;  // [s0, s1] x [q0, q1]
};

struct WallLine {
  CharVec v;
  CharVec w;
  CharVec coeff;  // alpha + beta s + gamma q = 0
  std::optional<std::pair<AffPt, AffPt>> clipped;

  bool contains(const Rational& s, const Rational& q) const { return coeff.ch0 + coeff.ch1 * s + coeff.ch2 * q == 0; }
  /// "s=..." for vertical walls, else "q=..." as an affine function of s.
  std::string equation() const;
};

/// Throws std::domain_error("no wall: classes parallel everywhere") when v
/// and w are proportional.
WallLine wall_line(const CharVec& v, const CharVec& w);

/// The part of the wall inside the window, if any.
std::optional<std::pair<AffPt, AffPt>> clip_to(const CharVec& coeff, const Window& window);

/// Walls of v against each pool member that meet the window, ordered by
/// where they cross the line q = q0 (horizontal walls by their left clipped
/// end), ties kept in pool order. Pool members proportional to v are skipped.
std::vector<WallLine> walls_for(const CharVec& v, const std::vector<ExcBundle>& pool, const Window& window);

}  // namespace stabscope
