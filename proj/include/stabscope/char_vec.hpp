#pragma once

#include "stabscope/rational.hpp"

#include <string>

namespace stabscope {

/// Numerical class (ch0, ch1, ch2) in the Grothendieck group of the plane.
/// ch0 may vanish (torsion classes such as the skyscraper (0, 0, 1)).
struct CharVec {
  Rational ch0;
  Rational ch1;
  Rational ch2;

  friend bool operator==(const CharVec&, const CharVec&) = default;

  CharVec operator+(const CharVec& o) const { return {ch0 + o.ch0, ch1 + o.ch1, ch2 + o.ch2}; }
  CharVec operator-(const CharVec& o) const { return {ch0 - o.ch0, ch1 - o.ch1, ch2 - o.ch2}; }
  CharVec operator-() const { return {-ch0, -ch1, -ch2}; }
  friend CharVec operator*(const Rational& k, const CharVec& v) { return {k * v.ch0, k * v.ch1, k * v.ch2}; }

  bool is_zero() const { return ch0 == 0 && ch1 == 0 && ch2 == 0; }
};

inline CharVec skyscraper() { return {Rational(0), Rational(0), Rational(1)}; }

/// Character of the line bundle O(n): (1, n, n^2/2).
CharVec line_bundle(const Rational& n);

/// Euler form chi(v, w) from Riemann-Roch on the plane.
Rational euler_chi(const CharVec& v, const CharVec& w);

/// ch1/ch0. Throws std::domain_error("slope undefined") when ch0 = 0.
Rational slope(const CharVec& v);

/// (1/2) slope^2 - ch2/ch0, constant along the parabolas Delta_a.
Rational delta(const CharVec& v);

Rational det3(const CharVec& u, const CharVec& v, const CharVec& w);

/// u x w, the coefficient vector of the plane spanned by u and w.
CharVec cross(const CharVec& u, const CharVec& w);

/// True iff v = k w for some rational k (either may be zero).
bool proportional(const CharVec& v, const CharVec& w);

/// Character twisted by O(k): (r, d + k r, c + k d + k^2 r / 2).
CharVec twist_char(const CharVec& v, const Rational& k);

std::string to_string(const CharVec& v);

}  // namespace stabscope
