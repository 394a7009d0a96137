#include "stabscope/quad_real.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <vector>

namespace stabscope {

namespace {

constexpr unsigned kSmallPrimeBound = 1000;

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<unsigned> out;
    std::vector<bool> composite(kSmallPrimeBound + 1, false);
    for (unsigned p = 2; p <= kSmallPrimeBound; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (unsigned q = p * p; q <= kSmallPrimeBound; q += p) composite[q] = true;
    }
    return out;
  }();
  return primes;
}

// d = k^2 * rest with rest free of small-prime squares. Returns k.
Integer extract_square(Integer& d) {
  Integer k = 1;
  if (d == 0) return k;
  if (mpz_perfect_square_p(d.get_mpz_t())) {
    mpz_sqrt(k.get_mpz_t(), d.get_mpz_t());
    d = 1;
    return k;
  }
  for (unsigned p : small_primes()) {
    Integer pp = Integer(p) * p;
    if (pp > d) break;
    while (mpz_divisible_p(d.get_mpz_t(), pp.get_mpz_t())) {
      d /= pp;
      k *= p;
    }
  }
  if (mpz_perfect_square_p(d.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
    k *= r;
    d = 1;
  }
  return k;
}

// sign(a + b sqrt d) for d >= 0.
int sign_single(const Rational& a, const Rational& b, const Integer& d) {
  int sa = sgn(a);
  int sb = (d == 0) ? 0 : sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d.
  Rational lhs = a * a;
  Rational rhs = b * b * Rational(d);
  int c = cmp(lhs, rhs);
  if (c > 0) return sa;
  if (c < 0) return sb;
  return 0;
}

void require_same_field(const QuadReal& x, const QuadReal& y) {
  if (!x.is_rational() && !y.is_rational() && x.d() != y.d()) {
    throw InvariantError("QuadReal arithmetic across different radicands");
  }
}

const Integer& common_d(const QuadReal& x, const QuadReal& y) {
  return x.is_rational() ? y.d() : x.d();
}

}  // namespace

QuadReal::QuadReal(const Rational& a) : a_(a), b_(0), d_(0) {}

QuadReal::QuadReal(Rational a, Rational b, Integer d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ < 0) throw InvariantError("QuadReal radicand must be nonnegative");
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  Integer k = extract_square(d_);
  b_ *= Rational(k);
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  }
}

QuadReal QuadReal::sqrt(const Rational& value) {
  if (value < 0) throw InvariantError("sqrt of a negative rational");
  // sqrt(p/q) = sqrt(p q) / q
  Integer radicand = value.get_num() * value.get_den();
  return QuadReal(Rational(0), Rational(Integer(1), value.get_den()), radicand);
}

const Rational& QuadReal::rational() const {
  if (!is_rational()) throw InvariantError("QuadReal is irrational");
  return a_;
}

int QuadReal::sign() const { return sign_single(a_, b_, d_); }

double QuadReal::to_double() const {
  if (is_rational()) return a_.get_d();
  return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

std::pair<Rational, Rational> QuadReal::enclose(unsigned bits) const {
  if (is_rational()) return {a_, a_};
  Integer scaled = d_;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Integer denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 2, bits);
  Rational lo_root(root, denom);
  Rational hi_root(root + 1, denom);
  lo_root.canonicalize();
  hi_root.canonicalize();
  Rational x = a_ + b_ * lo_root;
  Rational y = a_ + b_ * hi_root;
  return x < y ? std::pair{x, y} : std::pair{y, x};
}

QuadReal QuadReal::operator-() const {
  QuadReal r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadReal operator+(const QuadReal& x, const QuadReal& y) {
  require_same_field(x, y);
  return QuadReal(x.a_ + y.a_, x.b_ + y.b_, common_d(x, y));
}

QuadReal operator-(const QuadReal& x, const QuadReal& y) { return x + (-y); }

QuadReal operator*(const QuadReal& x, const QuadReal& y) {
  require_same_field(x, y);
  const Integer& d = common_d(x, y);
  Rational a = x.a_ * y.a_ + x.b_ * y.b_ * Rational(d);
  Rational b = x.a_ * y.b_ + x.b_ * y.a_;
  return QuadReal(a, b, d);
}

QuadReal operator/(const QuadReal& x, const QuadReal& y) {
  require_same_field(x, y);
  if (y.sign() == 0) throw std::domain_error("QuadReal division by zero");
  if (y.is_rational()) {
    const Rational& r = y.a_;
    return QuadReal(x.a_ / r, x.b_ / r, x.d_);
  }
  QuadReal conj(y.a_, -y.b_, y.d_);
  Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(y.d_);
  QuadReal num = x * conj;
  return QuadReal(num.a_ / norm, num.b_ / norm, num.d_);
}

int sign_of_sum(const Rational& r, const Rational& b1, const Integer& d1,
                const Rational& b2, const Integer& d2) {
  if (b2 == 0 || d2 == 0) return sign_single(r, b1, d1);
  if (b1 == 0 || d1 == 0) return sign_single(r, b2, d2);
  if (d1 == d2) return sign_single(r, b1 + b2, d1);
  int su = sign_single(r, b1, d1);
  int sw = sgn(b2);
  if (su == 0) return sw;
  if (su == sw) return su;
  // u = r + b1 sqrt d1 and w = b2 sqrt d2 have opposite signs: compare u^2, w^2.
  Rational sq_a = r * r + b1 * b1 * Rational(d1);
  Rational sq_b = 2 * r * b1;
  int t = sign_single(sq_a - b2 * b2 * Rational(d2), sq_b, d1);
  if (t > 0) return su;
  if (t < 0) return sw;
  return 0;
}

std::strong_ordering operator<=>(const QuadReal& x, const QuadReal& y) {
  int s = sign_of_sum(x.a_ - y.a_, x.b_, x.d_, -y.b_, y.d_);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string QuadReal::str() const {
  if (is_rational()) return to_string(a_);
  std::ostringstream out;
  if (a_ != 0) out << to_string(a_) << (b_ > 0 ? "+" : "");
  out << to_string(b_) << "*sqrt(" << d_.get_str() << ")";
  return out.str();
}

}  // namespace stabscope
