#include "stabscope/char_vec.hpp"

#include <stdexcept>

namespace stabscope {

CharVec line_bundle(const Rational& n) { return {Rational(1), n, n * n / 2}; }

Rational euler_chi(const CharVec& v, const CharVec& w) {
  return v.ch0 * w.ch0 + Rational(3, 2) * (v.ch0 * w.ch1 - w.ch0 * v.ch1) + v.ch0 * w.ch2 +
         w.ch0 * v.ch2 - v.ch1 * w.ch1;
}

Rational slope(const CharVec& v) {
  if (v.ch0 == 0) throw std::domain_error("slope undefined");
  return v.ch1 / v.ch0;
}

Rational delta(const CharVec& v) {
  if (v.ch0 == 0) throw std::domain_error("delta undefined for rank zero");
  Rational mu = v.ch1 / v.ch0;
  return mu * mu / 2 - v.ch2 / v.ch0;
}

Rational det3(const CharVec& u, const CharVec& v, const CharVec& w) {
  return u.ch0 * (v.ch1 * w.ch2 - v.ch2 * w.ch1) - u.ch1 * (v.ch0 * w.ch2 - v.ch2 * w.ch0) +
         u.ch2 * (v.ch0 * w.ch1 - v.ch1 * w.ch0);
}

CharVec cross(const CharVec& u, const CharVec& w) {
  return {u.ch1 * w.ch2 - u.ch2 * w.ch1, u.ch2 * w.ch0 - u.ch0 * w.ch2, u.ch0 * w.ch1 - u.ch1 * w.ch0};
}

bool proportional(const CharVec& v, const CharVec& w) { return cross(v, w).is_zero(); }

CharVec twist_char(const CharVec& v, const Rational& k) {
  return {v.ch0, v.ch1 + k * v.ch0, v.ch2 + k * v.ch1 + k * k * v.ch0 / 2};
}

std::string to_string(const CharVec& v) {
  return "(" + to_string(v.ch0) + "," + to_string(v.ch1) + "," + to_string(v.ch2) + ")";
}

}  // namespace stabscope
