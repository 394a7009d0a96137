#pragma once

// Central charges on the character lattice, phases and the kernel map.
//
// Z_{s,q}(v) = (-ch2 + q ch0) + i (ch1 - s ch0). Writing d = v/ch0 - (s, q)
// for the offset of the projected class from P = (s, q), Z_{s,q}(v) is
// ch0 * (-d_y + i d_x): the offset rotated a quarter turn. The phase of a
// class is thus the angle its ray from P makes with the downward vertical,
// and every phase comparison reduces to a cross product.

#include "stabscope/exceptional.hpp"
#include "stabscope/lepotier.hpp"

#include <optional>
#include <string>

namespace stabscope {

struct Complex {
  Rational re;
  Rational im;

  friend bool operator==(const Complex&, const Complex&) = default;
  Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
  Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
  Complex operator-() const { return {-re, -im}; }
  Complex operator*(const Complex& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  friend Complex operator*(const Rational& k, const Complex& z) { return {k * z.re, k * z.im}; }
  bool is_zero() const { return re == 0 && im == 0; }
};

/// Im(conj(z) * w): positive iff w is counterclockwise of z within a half turn.
Rational cross(const Complex& z, const Complex& w);
double abs_value(const Complex& z);
std::string to_string(const Complex& z);

/// Real 2x2 matrix acting on C = R^2.
struct Mat2 {
  Rational a, b, c, d;  // [[a, b], [c, d]]

  static Mat2 identity() { return {Rational(1), Rational(0), Rational(0), Rational(1)}; }
  Rational det() const { return a * d - b * c; }
  Mat2 inverse() const;
  Complex apply(const Complex& z) const { return {a * z.re + b * z.im, c * z.re + d * z.im}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// An exact phase phi = n + theta, theta in (0, 1], attached to the
/// central-charge value z of an object: (-1)^n z lies in the half-open upper
/// half-plane U = {Im > 0} u {negative reals} and theta = arg((-1)^n z)/pi.
class ExactPhase {
 public:
  ExactPhase() = default;
  /// Phase of E[shift] given z = Z(E): shift + Arg(z)/pi, Arg in (-pi, pi].
  static ExactPhase of(const Complex& z, long shift = 0);
  /// Phase k + theta with theta in [0, 1) for the value z; requires
  /// (-1)^k z in {Im > 0} u {positive reals}.
  static ExactPhase from_floor(const Complex& z, long k);
  /// A value m * (cos pi*phi, sin pi*phi) built from doubles. The unit vector
  /// is converted exactly from the rounded cosine and sine, except that
  /// multiples of 1/2 are snapped to exact axis points.
  static ExactPhase from_double(double m, double phi);
  /// The phase with turn n for the value z; requires (-1)^n z in U.
  static ExactPhase with_turn(const Complex& z, long n);

  /// The object's own central-charge value.
  const Complex& value() const { return z_; }
  long turn() const { return n_; }
  /// (-1)^n z, the representative in U.
  Complex unit_rep() const { return (n_ % 2 == 0) ? z_ : -z_; }

  double approx() const;
  double magnitude() const { return abs_value(z_); }

  /// Phase of the object shifted by [k]: value multiplied by (-1)^k.
  ExactPhase shifted(long k) const;

  friend std::strong_ordering operator<=>(const ExactPhase& x, const ExactPhase& y);
  friend bool operator==(const ExactPhase& x, const ExactPhase& y) { return x.z_ == y.z_ && x.n_ == y.n_; }

 private:
  ExactPhase(Complex z, long n) : z_(std::move(z)), n_(n) {}
  Complex z_{Rational(-1), Rational(0)};
  long n_ = 0;
};

/// True iff z is in U = {Im > 0} u {negative reals}.
bool in_upper(const Complex& z);

/// The charge Z_{s,q}. `checked` records that (s, q) was found in Geo_LP.
struct SQCharge {
  Rational s;
  Rational q;
  bool checked = false;

  /// Throws std::domain_error unless classify_point((s,q), depth) is GeoLP.
  static SQCharge checked_at(const Rational& s, const Rational& q, int depth);
  AffPt point() const { return make_point(s, q); }
};

/// Z(v) = c0 ch0 + c1 ch1 + c2 ch2 with complex coefficients. The form
/// -ch2 + a ch1 + b ch0 is the case c2 = -1.
struct GeneralCharge {
  Complex c0;
  Complex c1;
  Complex c2;

  static GeneralCharge from_ab(const Complex& a, const Complex& b);
  static GeneralCharge from_sq(const Rational& s, const Rational& q);
  /// g o Z.
  GeneralCharge transformed(const Mat2& g) const { return {g.apply(c0), g.apply(c1), g.apply(c2)}; }
  friend bool operator==(const GeneralCharge&, const GeneralCharge&) = default;
};

Complex z_eval(const SQCharge& z, const CharVec& v);
Complex z_eval(const GeneralCharge& z, const CharVec& v);

struct ShiftedChar {
  CharVec chr;
  long shift = 0;
};

enum class HeartPos { InHeart, NeedsShiftOne, Torsion };

std::string to_string(HeartPos h);

/// Membership in the tilted heart at slope s. `v` must be the class of a
/// slope-semistable sheaf (a character alone cannot certify that); ch0 < 0
/// is rejected with std::invalid_argument.
HeartPos heart_position(const Rational& s, const CharVec& v);

/// phase(E[n]) = n + Arg(Z(E))/pi. Throws std::domain_error("class in
/// kernel") when Z(E) = 0.
ExactPhase phase(const SQCharge& z, const ShiftedChar& x);

std::strong_ordering phase_compare(const SQCharge& z, const ShiftedChar& x, const ShiftedChar& y);

enum class Stability { StableUnshifted, StableShifted, NotStable, Unknown };

std::string to_string(Stability s);

/// Whether E (if s < mu(E)) or E[1] is sigma_P-stable, by testing whether
/// the half-open segment from e(E) to P stays in Geo_LP. Throws
/// std::domain_error when P is not classified GeoLP at this depth.
Stability exc_stable_at(const ExcBundle& e, const AffPt& p, int depth);

struct KernelPoint {
  CharVec direction;            // spans the real kernel
  std::optional<AffPt> affine;  // (1, s, q) when direction.ch0 != 0
};

/// Real kernel of Z. Throws std::domain_error("degenerate") when the image
/// of Z lies in a real line.
KernelPoint kernel_point(const GeneralCharge& z);

/// True iff the image of Z lies in a real line.
bool is_degenerate(const GeneralCharge& z);

struct Normalized {
  Rational s;
  Rational q;
  Mat2 g;  // Z = g o Z_{s,q}
};

/// (s, q, g) with Z = g o Z_{s,q}, det g > 0 and (s, q) in Geo_LP; empty
/// when any of these fail (kernel at infinity included).
std::optional<Normalized> normalize_charge(const GeneralCharge& z, int depth);

/// The 2x2 map g with Z = g o Z_{s,q} on the ch1, ch2 coefficients.
Mat2 charge_frame(const GeneralCharge& z);

}  // namespace stabscope
