#include "doctest.h"

#include "stabscope/plane.hpp"

#include <mpfr.h>

#include <random>

using namespace stabscope;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("euler form") {
  CharVec o = line_bundle(0), o1 = line_bundle(1);
  CHECK(euler_chi(o, o1) == 3);
  CHECK(euler_chi(o1, o) == 0);
  CHECK(euler_chi(o, skyscraper()) == 1);
}

TEST_CASE("quadratic reals normalize and compare") {
  CHECK(QuadReal::sqrt(Rational(8)) == QuadReal(Rational(0), Rational(2), Integer(2)));
  CHECK(QuadReal::sqrt(Rational(9, 4)).is_rational());
  CHECK(QuadReal::sqrt(Rational(2)) < QuadReal::sqrt(Rational(3)));
  CHECK(sign_of_sum(Rational(0), Rational(1), Integer(2), Rational(1), Integer(3)) > 0);
  CHECK(sign_of_sum(Rational(0), Rational(1), Integer(8), Rational(-2), Integer(2)) == 0);
}

namespace {
int mpfr_sign_of(const Rational& r, const Rational& b1, long d1, const Rational& b2, long d2) {
  mpfr_t acc, t;
  mpfr_inits2(4096, acc, t, (mpfr_ptr)0);
  mpfr_set_q(acc, r.get_mpq_t(), MPFR_RNDN);
  mpfr_sqrt_ui(t, d1, MPFR_RNDN);
  mpfr_mul_q(t, t, b1.get_mpq_t(), MPFR_RNDN);
  mpfr_add(acc, acc, t, MPFR_RNDN);
  mpfr_sqrt_ui(t, d2, MPFR_RNDN);
  mpfr_mul_q(t, t, b2.get_mpq_t(), MPFR_RNDN);
  mpfr_add(acc, acc, t, MPFR_RNDN);
  int s = mpfr_sgn(acc);
  mpfr_clears(acc, t, (mpfr_ptr)0);
  return s;
}
}  // namespace

TEST_CASE("exact sign matches high-precision floating point") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> small(-40, 40), rad(0, 60);
  for (int i = 0; i < 3000; ++i) {
    Rational r(small(rng), 1 + rad(rng)), b1(small(rng), 1 + rad(rng)), b2(small(rng), 1 + rad(rng));
    r.canonicalize();
    b1.canonicalize();
    b2.canonicalize();
    long d1 = rad(rng), d2 = rad(rng);
    int exact = sign_of_sum(r, b1, Integer(d1), b2, Integer(d2));
    int approx = mpfr_sign_of(r, b1, d1, b2, d2);
    if (approx != 0) CHECK(exact == approx);
  }
}

TEST_CASE("ray order") {
  AffPt p = make_point(0, 0);
  CHECK(ray_above(p, make_point(1, 1), make_point(1, 0)) == RayOrder::Above);
  CHECK(ray_above(p, make_point(2, 0), make_point(1, 0)) == RayOrder::Equal);
  CHECK(ray_above(p, make_point(0, 1), make_point(1, 5)) == RayOrder::Above);
  CHECK_THROWS(ray_above(p, make_point(-1, 0), make_point(1, 0)));
}

TEST_CASE("polygon inclusion flags") {
  Polygon tri{{make_point(0, 0), make_point(2, 0), make_point(0, 2)}, {true, true, false}, {false, false, false}};
  CHECK(point_in_polygon(make_point(1, 0), tri));
  CHECK(point_in_polygon(make_point(1, 1), tri));
  CHECK_FALSE(point_in_polygon(make_point(0, 1), tri));
  CHECK_FALSE(point_in_polygon(make_point(0, 0), tri));
  CHECK(point_in_polygon(make_point(Rational(1, 2), Rational(1, 2)), tri));
  CHECK_FALSE(point_in_polygon(make_point(3, 3), tri));
}
