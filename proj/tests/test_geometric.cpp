#include "doctest.h"

#include "stabscope/geometric.hpp"
#include "support.hpp"

using namespace stabscope;
using namespace stabscope::testing;

namespace {
Rational q(const char* s) { return parse_rational(s); }
CharVec cv(const char* a, const char* b, const char* c) { return {q(a), q(b), q(c)}; }
Complex cx(const char* re, const char* im) { return {q(re), q(im)}; }
const SQCharge kHalfZero{q("1/2"), q("0"), true};
}  // namespace

TEST_CASE("charge evaluation") {
  CHECK(z_eval(SQCharge{q("3"), q("-7")}, skyscraper()) == cx("-1", "0"));
  CHECK(z_eval(kHalfZero, cv("1", "1", "1/2")) == cx("-1/2", "1/2"));
  CHECK(z_eval(SQCharge{q("0"), q("0")}, cv("1", "0", "0")) == cx("0", "0"));
  CHECK(z_eval(GeneralCharge::from_sq(q("1/2"), q("0")), cv("1", "2", "2")) == z_eval(kHalfZero, cv("1", "2", "2")));
}

TEST_CASE("charge vanishes exactly on the kernel line") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    SQCharge z{random_rational(rng, 20, 7), random_rational(rng, 20, 7)};
    CharVec v{random_rational(rng, 5, 3), random_rational(rng, 5, 3), random_rational(rng, 5, 3)};
    CharVec k{Rational(1), z.s, z.q};
    CHECK(z_eval(z, v).is_zero() == proportional(v, k));
    CHECK(z_eval(z, random_rational(rng, 5, 3) * k).is_zero());
  }
}

TEST_CASE("heart position") {
  CHECK(heart_position(q("1/2"), line_bundle(1)) == HeartPos::InHeart);
  CHECK(heart_position(q("1/2"), line_bundle(0)) == HeartPos::NeedsShiftOne);
  CHECK(heart_position(q("9"), skyscraper()) == HeartPos::Torsion);
  CHECK_THROWS_AS(heart_position(q("0"), cv("-1", "0", "0")), std::invalid_argument);
}

TEST_CASE("phases") {
  CHECK(phase(kHalfZero, {skyscraper(), 0}).approx() == doctest::Approx(1.0));
  CHECK(phase(kHalfZero, {skyscraper(), 0}) == ExactPhase::of(cx("-1", "0")));
  CHECK(phase(kHalfZero, {line_bundle(1), 0}).approx() == doctest::Approx(0.75));
  CHECK(phase(kHalfZero, {line_bundle(0), 1}).approx() == doctest::Approx(0.5));
  CHECK(phase_compare(kHalfZero, {line_bundle(0), 1}, {line_bundle(1), 0}) < 0);
  CHECK(phase_compare(kHalfZero, {line_bundle(1), 0}, {line_bundle(1), 0}) == 0);
  CHECK(phase_compare(kHalfZero, {skyscraper(), 0}, {line_bundle(2), 0}) > 0);
  CHECK_THROWS_AS(phase(SQCharge{q("0"), q("0")}, {line_bundle(0), 0}), std::domain_error);
}

TEST_CASE("phase order matches the ray order at P") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    SQCharge z{random_rational(rng, 6, 4), random_rational(rng, 6, 4)};
    AffPt p = z.point();
    CharVec v{Rational(1), random_rational(rng, 12, 4), random_rational(rng, 12, 4)};
    CharVec w{Rational(2), random_rational(rng, 12, 4), random_rational(rng, 12, 4)};
    AffPt a = project(v), b = project(w);
    if (a == p || b == p || !in_right_half_plane(p, a) || !in_right_half_plane(p, b)) continue;
    auto order = phase_compare(z, {v, 0}, {w, 0});
    RayOrder ray = ray_above(p, a, b);
    CHECK((order > 0) == (ray == RayOrder::Above));
    CHECK((order == 0) == (ray == RayOrder::Equal));
    // Positive rescaling leaves phases alone.
    CHECK(phase_compare(z, {Rational(7, 3) * v, 0}, {w, 0}) == order);
  }
}

TEST_CASE("skyscraper has phase one on Geo_LP") {
  std::mt19937_64 rng(9);
  int n = 0;
  while (n < 100) {
    Rational s = random_rational(rng, 20, 8), qq = random_rational(rng, 20, 8);
    if (classify_point(make_point(s, qq), 6).kind != RegionClass::GeoLP) continue;
    ++n;
    CHECK(phase(SQCharge::checked_at(s, qq, 6), {skyscraper(), 0}) == ExactPhase::of(cx("-1", "0")));
  }
  CHECK_THROWS_AS(SQCharge::checked_at(q("0"), q("-2"), 6), std::domain_error);
}

TEST_CASE("exceptional stability examples") {
  const AffPt p = make_point(q("1/2"), q("0"));
  CHECK(exc_stable_at(ExcBundle::of(DyadicLabel::integer(0)), p, 2) == Stability::StableShifted);
  CHECK(exc_stable_at(ExcBundle::of(DyadicLabel::integer(1)), p, 2) == Stability::StableUnshifted);
  CHECK(exc_stable_at(ExcBundle::of(DyadicLabel::integer(0)), make_point(q("1/10"), q("-2/5")), 2) ==
        Stability::StableShifted);
  // The segment from e(1) = (1, 1/2) to P crosses x = 0 at y = -1/14, on the
  // exclusion segment of O.
  CHECK(exc_stable_at(ExcBundle::of(DyadicLabel::integer(1)), make_point(q("-2/5"), q("-3/10")), 4) ==
        Stability::NotStable);
  CHECK_THROWS_AS(exc_stable_at(ExcBundle::of(DyadicLabel::integer(0)), make_point(q("0"), q("-2")), 2),
                  std::domain_error);
}

TEST_CASE("exceptional stability is twist equivariant") {
  std::mt19937_64 rng(12);
  int checked = 0;
  while (checked < 150) {
    Rational s = random_rational(rng, 16, 8), qq = random_rational(rng, 16, 8);
    AffPt p = make_point(s, qq);
    if (classify_point(p, 5).kind != RegionClass::GeoLP) continue;
    AffPt pt = make_point(s + 1, qq + s + Rational(1, 2));
    for (const char* l : {"0", "1/2", "-3/4", "1"}) {
      DyadicLabel label = DyadicLabel::parse(l);
      CHECK(exc_stable_at(ExcBundle::of(label), p, 5) == exc_stable_at(ExcBundle::of(label + 1), pt, 5));
    }
    ++checked;
  }
}

TEST_CASE("kernel examples") {
  auto k = kernel_point(GeneralCharge::from_sq(q("3/7"), q("-2")));
  REQUIRE(k.affine);
  CHECK(*k.affine == make_point(q("3/7"), q("-2")));
  Mat2 rot{q("3/5"), q("-4/5"), q("4/5"), q("3/5")};
  CHECK(*kernel_point(GeneralCharge::from_sq(q("3/7"), q("-2")).transformed(rot)).affine == *k.affine);
  CHECK_THROWS_AS(kernel_point(GeneralCharge::from_ab(cx("1", "0"), cx("0", "0"))), std::domain_error);
  // Writing Z_{s,q} as -ch2 + a ch1 + b ch0 gives a = i, b = q - i s.
  GeneralCharge ab = GeneralCharge::from_ab(cx("0", "1"), cx("-2", "-3/7"));
  CHECK(*kernel_point(ab).affine == *k.affine);
}

TEST_CASE("normalization") {
  auto n = normalize_charge(GeneralCharge::from_sq(q("1/2"), q("0")), 8);
  REQUIRE(n);
  CHECK(n->s == q("1/2"));
  CHECK(n->g == Mat2::identity());
  Mat2 rot{q("3/5"), q("-4/5"), q("4/5"), q("3/5")};
  auto r = normalize_charge(GeneralCharge::from_sq(q("1/2"), q("0")).transformed(rot), 8);
  REQUIRE(r);
  CHECK(r->g == rot);
  CHECK_FALSE(normalize_charge(GeneralCharge::from_sq(q("0"), q("-3")), 8));
  Mat2 flip{q("1"), q("0"), q("0"), q("-1")};
  CHECK_FALSE(normalize_charge(GeneralCharge::from_sq(q("1/2"), q("0")).transformed(flip), 8));
}

TEST_CASE("normalization recovers random frames") {
  std::mt19937_64 rng(21);
  int n = 0;
  while (n < 100) {
    Rational s = random_rational(rng, 12, 6), qq = random_rational(rng, 12, 6);
    if (classify_point(make_point(s, qq), 6).kind != RegionClass::GeoLP) continue;
    GLElement g = random_gl(rng);
    auto r = normalize_charge(GeneralCharge::from_sq(s, qq).transformed(g.t), 6);
    REQUIRE(r);
    CHECK(r->s == s);
    CHECK(r->q == qq);
    CHECK(r->g == g.t);
    ++n;
  }
}
