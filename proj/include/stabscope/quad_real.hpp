#pragma once

#include "stabscope/rational.hpp"

#include <compare>
#include <string>
#include <utility>

namespace stabscope {

/// A real number a + b*sqrt(d) with rational a, b and integer d >= 0.
///
/// Values are normalized on construction: a rational value (b == 0, d == 0
/// or d a perfect square) is stored as (a, 0, 0), and square factors of small
/// primes are pulled out of d. Large radicands may keep a square factor; this
/// never affects correctness since every comparison is decided by exact sign
/// analysis, only the textual form.
///
/// Arithmetic is closed inside one extension Q(sqrt d); mixing two different
/// radicands throws. Comparisons accept any two values, including different
/// radicands.
class QuadReal {
 public:
  QuadReal() = default;
  QuadReal(const Rational& a);  // NOLINT(google-explicit-constructor)
  QuadReal(long a) : QuadReal(Rational(a)) {}  // NOLINT(google-explicit-constructor)
  QuadReal(Rational a, Rational b, Integer d);

  /// sqrt(value) for a nonnegative rational.
  static QuadReal sqrt(const Rational& value);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  /// Precondition: is_rational().
  const Rational& rational() const;

  int sign() const;
  double to_double() const;
  /// Rational lo <= value <= hi with hi - lo <= |b| * 2^-bits.
  std::pair<Rational, Rational> enclose(unsigned bits) const;

  QuadReal operator-() const;
  friend QuadReal operator+(const QuadReal& x, const QuadReal& y);
  friend QuadReal operator-(const QuadReal& x, const QuadReal& y);
  friend QuadReal operator*(const QuadReal& x, const QuadReal& y);
  friend QuadReal operator/(const QuadReal& x, const QuadReal& y);

  friend std::strong_ordering operator<=>(const QuadReal& x, const QuadReal& y);
  friend bool operator==(const QuadReal& x, const QuadReal& y) {
    return (x <=> y) == std::strong_ordering::equal;
  }

  /// "a", or "a+b*sqrt(d)" for display.
  std::string str() const;

 private:
  Rational a_;
  Rational b_;
  Integer d_;
};

/// Exact sign of r + b1*sqrt(d1) + b2*sqrt(d2).
int sign_of_sum(const Rational& r, const Rational& b1, const Integer& d1,
                const Rational& b2, const Integer& d2);

inline QuadReal min(const QuadReal& x, const QuadReal& y) { return (y < x) ? y : x; }
inline QuadReal max(const QuadReal& x, const QuadReal& y) { return (x < y) ? y : x; }

}  // namespace stabscope
