#include "stabscope/geometric.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stabscope {

Rational cross(const Complex& z, const Complex& w) { return z.re * w.im - z.im * w.re; }

double abs_value(const Complex& z) { return std::hypot(z.re.get_d(), z.im.get_d()); }

std::string to_string(const Complex& z) { return to_string(z.re) + (sgn(z.im) < 0 ? "" : "+") + to_string(z.im) + "i"; }

Mat2 Mat2::inverse() const {
  const Rational dt = det();
  if (dt == 0) throw std::domain_error("singular matrix");
  return {d / dt, -b / dt, -c / dt, a / dt};
}

bool in_upper(const Complex& z) { return sgn(z.im) > 0 || (z.im == 0 && sgn(z.re) < 0); }

// ---------------------------------------------------------------------------
// ExactPhase

ExactPhase ExactPhase::of(const Complex& z, long shift) {
  if (z.is_zero()) throw std::domain_error("class in kernel");
  const Complex value = (shift % 2 == 0) ? z : -z;
  if (in_upper(z)) return {value, shift};
  return {value, shift - 1};
}

ExactPhase ExactPhase::from_floor(const Complex& z, long k) {
  const Complex w = (k % 2 == 0) ? z : -z;
  if (sgn(w.im) > 0) return {z, k};
  if (w.im == 0 && sgn(w.re) > 0) return {z, k - 1};
  throw std::invalid_argument("unit vector does not match the phase branch");
}

ExactPhase ExactPhase::from_double(double m, double phi) {
  if (!std::isfinite(m) || !std::isfinite(phi)) throw std::invalid_argument("non-finite phase parameter");
  const double k = std::floor(phi);
  const double theta = phi - k;
  const long kl = static_cast<long>(k);
  const Rational mag = stabscope::from_double(m);
  Complex unit;
  if (theta == 0.0) {
    unit = {Rational(1), Rational(0)};
  } else if (theta == 0.5) {
    unit = {Rational(0), Rational(1)};
  } else {
    unit = {stabscope::from_double(std::cos(std::numbers::pi * theta)),
            stabscope::from_double(std::sin(std::numbers::pi * theta))};
  }
  if (kl % 2 != 0) unit = -unit;
  return from_floor(mag * unit, kl);
}

ExactPhase ExactPhase::with_turn(const Complex& z, long n) {
  if (!in_upper((n % 2 == 0) ? z : -z)) throw InvariantError("phase turn does not match the value");
  return {z, n};
}

double ExactPhase::approx() const {
  const Complex w = unit_rep();
  return static_cast<double>(n_) + std::atan2(w.im.get_d(), w.re.get_d()) / std::numbers::pi;
}

ExactPhase ExactPhase::shifted(long k) const { return {(k % 2 == 0) ? z_ : -z_, n_ + k}; }

std::strong_ordering operator<=>(const ExactPhase& x, const ExactPhase& y) {
  if (x.n_ != y.n_) return x.n_ <=> y.n_;
  // Both representatives lie in U, where the angle order is the cross sign.
  const int c = sgn(cross(x.unit_rep(), y.unit_rep()));
  if (c > 0) return std::strong_ordering::less;
  if (c < 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Charges

SQCharge SQCharge::checked_at(const Rational& s, const Rational& q, int depth) {
  if (classify_point(make_point(s, q), depth).kind != RegionClass::GeoLP)
    throw std::domain_error("(s,q) is not in Geo_LP");
  return {s, q, true};
}

GeneralCharge GeneralCharge::from_ab(const Complex& a, const Complex& b) {
  return {b, a, {Rational(-1), Rational(0)}};
}

GeneralCharge GeneralCharge::from_sq(const Rational& s, const Rational& q) {
  return from_ab({Rational(0), Rational(1)}, {q, -s});
}

Complex z_eval(const SQCharge& z, const CharVec& v) { return {-v.ch2 + z.q * v.ch0, v.ch1 - z.s * v.ch0}; }

Complex z_eval(const GeneralCharge& z, const CharVec& v) { return v.ch0 * z.c0 + v.ch1 * z.c1 + v.ch2 * z.c2; }

std::string to_string(HeartPos h) {
  switch (h) {
    case HeartPos::InHeart: return "InHeart";
    case HeartPos::NeedsShiftOne: return "NeedsShiftOne";
    case HeartPos::Torsion: return "Torsion";
  }
  return "?";
}

HeartPos heart_position(const Rational& s, const CharVec& v) {
  if (sgn(v.ch0) < 0) throw std::invalid_argument("not a sheaf class: negative rank");
  if (v.ch0 == 0) return HeartPos::Torsion;
  return slope(v) > s ? HeartPos::InHeart : HeartPos::NeedsShiftOne;
}

ExactPhase phase(const SQCharge& z, const ShiftedChar& x) { return ExactPhase::of(z_eval(z, x.chr), x.shift); }

std::strong_ordering phase_compare(const SQCharge& z, const ShiftedChar& x, const ShiftedChar& y) {
  return phase(z, x) <=> phase(z, y);
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::StableUnshifted: return "StableUnshifted";
    case Stability::StableShifted: return "StableShifted";
    case Stability::NotStable: return "NotStable";
    case Stability::Unknown: return "Unknown";
  }
  return "?";
}

Stability exc_stable_at(const ExcBundle& e, const AffPt& p, int depth) {
  if (classify_point(p, depth).kind != RegionClass::GeoLP) throw std::domain_error("point is not in Geo_LP");
  const Verdict v = geo_contains_segment(project(e.chr), p, depth, true);
  if (v == Verdict::Unknown) return Stability::Unknown;
  if (v == Verdict::No) return Stability::NotStable;
  return QuadReal(slope(e.chr)) > p.x ? Stability::StableUnshifted : Stability::StableShifted;
}

namespace {

CharVec re_row(const GeneralCharge& z) { return {z.c0.re, z.c1.re, z.c2.re}; }
CharVec im_row(const GeneralCharge& z) { return {z.c0.im, z.c1.im, z.c2.im}; }

}  // namespace

bool is_degenerate(const GeneralCharge& z) { return cross(re_row(z), im_row(z)).is_zero(); }

KernelPoint kernel_point(const GeneralCharge& z) {
  const CharVec k = cross(re_row(z), im_row(z));
  if (k.is_zero()) throw std::domain_error("degenerate");
  KernelPoint out{k, std::nullopt};
  if (k.ch0 != 0) out.affine = make_point(k.ch1 / k.ch0, k.ch2 / k.ch0);
  return out;
}

Mat2 charge_frame(const GeneralCharge& z) { return {-z.c2.re, z.c1.re, -z.c2.im, z.c1.im}; }

std::optional<Normalized> normalize_charge(const GeneralCharge& z, int depth) {
  const KernelPoint k = kernel_point(z);
  if (!k.affine) return std::nullopt;
  const Rational s = rational_x(*k.affine), q = rational_y(*k.affine);
  const Mat2 g = charge_frame(z);
  if (sgn(g.det()) <= 0) return std::nullopt;
  if (classify_point(*k.affine, depth).kind != RegionClass::GeoLP) return std::nullopt;
  if (!(GeneralCharge::from_sq(s, q).transformed(g) == z)) throw InvariantError("normalization does not reproduce Z");
  return Normalized{s, q, g};
}

}  // namespace stabscope
