#include "doctest.h"

#include "stabscope/geometric.hpp"
#include "stabscope/walls.hpp"
#include "support.hpp"

using namespace stabscope;
using namespace stabscope::testing;

namespace {
Rational q(const char* s) { return parse_rational(s); }
CharVec cv(const char* a, const char* b, const char* c) { return {q(a), q(b), q(c)}; }
}  // namespace

TEST_CASE("wall equations") {
  CHECK(wall_line(skyscraper(), line_bundle(0)).equation() == "s=0");
  CHECK(wall_line(line_bundle(0), line_bundle(1)).equation() == "q=s/2");
  CHECK(wall_line(line_bundle(1), line_bundle(2)).equation() == "q=3*s/2-1");
  CHECK_THROWS_AS(wall_line(cv("2", "2", "1"), line_bundle(1)), std::domain_error);
}

TEST_CASE("walls of the skyscraper against line bundles") {
  std::vector<ExcBundle> pool;
  for (int k = 2; k >= -2; --k) pool.push_back(ExcBundle::of(DyadicLabel::integer(k)));
  Window w{q("-2"), q("2"), q("-3"), q("1")};
  auto walls = walls_for(skyscraper(), pool, w);
  REQUIRE(walls.size() == 5);
  for (int k = -2; k <= 2; ++k) {
    const WallLine& wall = walls[static_cast<std::size_t>(k + 2)];
    CHECK(wall.equation() == "s=" + std::to_string(k));
    CHECK(wall.clipped->first == make_point(Rational(k), q("-3")));
    CHECK(wall.clipped->second == make_point(Rational(k), q("1")));
  }
  CHECK(walls_for(skyscraper(), {}, w).empty());
  auto single = walls_for(line_bundle(0), {ExcBundle::of(DyadicLabel::integer(1))}, w);
  REQUIRE(single.size() == 1);
  CHECK(single[0].equation() == "q=s/2");
}

TEST_CASE("wall incidence, symmetry and charge proportionality") {
  std::mt19937_64 rng(4);
  int n = 0;
  while (n < 200) {
    CharVec v{random_rational(rng, 4, 2), random_rational(rng, 6, 3), random_rational(rng, 6, 3)};
    CharVec w{random_rational(rng, 4, 2), random_rational(rng, 6, 3), random_rational(rng, 6, 3)};
    if (proportional(v, w)) continue;
    const CharVec c = cross(v, w);
    if (c.ch1 == 0 && c.ch2 == 0) continue;
    ++n;
    WallLine wall = wall_line(v, w);
    for (const CharVec* x : {&v, &w}) {
      if (x->ch0 != 0) CHECK(wall.contains(x->ch1 / x->ch0, x->ch2 / x->ch0));
    }
    CHECK(proportional(wall.coeff, wall_line(w, v).coeff));
    for (int i = 0; i < 5; ++i) {
      Rational s, qq;
      if (wall.coeff.ch2 != 0) {
        s = random_rational(rng, 10, 5);
        qq = -(wall.coeff.ch0 + wall.coeff.ch1 * s) / wall.coeff.ch2;
      } else {
        qq = random_rational(rng, 10, 5);
        s = -wall.coeff.ch0 / wall.coeff.ch1;
      }
      CHECK(wall.contains(s, qq));
      SQCharge z{s, qq};
      CHECK(cross(z_eval(z, v), z_eval(z, w)) == 0);
    }
  }
}
