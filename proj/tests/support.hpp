#pragma once

// Random exact inputs shared by the unit tests and the acceptance run.

#include "stabscope/algebraic.hpp"

#include <random>

namespace stabscope::testing {

inline Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound), den(1, den_bound);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

/// Rational point on the unit circle strictly inside the upper half-plane,
/// at angle 2 atan(t).
inline Complex upper_unit(const Rational& t) {
  const Rational d = 1 + t * t;
  return {(1 - t * t) / d, 2 * t / d};
}

/// phi = k + theta with theta in (0, 1) drawn from a rational unit vector.
inline ExactPhase random_phase(std::mt19937_64& rng, long k, const Rational& m) {
  std::uniform_int_distribution<long> num(1, 400), den(1, 100);
  Rational t(num(rng), den(rng));
  t.canonicalize();
  Complex u = upper_unit(t);
  if (k % 2 != 0) u = -u;
  return ExactPhase::from_floor(m * u, k);
}

inline Rational random_mass(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 40), den(1, 10);
  Rational m(num(rng), den(rng));
  m.canonicalize();
  return m;
}

/// Valid parameters with phi1 in (k1, k1+1) and the other floors drawn so
/// that every cell is reachable.
inline ThetaParams random_params(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> k1d(-2, 2), gap(0, 2);
  while (true) {
    const long k1 = k1d(rng);
    const long k2 = k1 + gap(rng);
    const long k3 = k2 + gap(rng);
    ThetaParams p;
    p.slot = {random_phase(rng, k1, random_mass(rng)), random_phase(rng, k2, random_mass(rng)),
              random_phase(rng, k3, random_mass(rng))};
    if (validate_params(p)) return p;
  }
}

inline GLElement random_gl(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> kd(-1, 1);
  while (true) {
    Mat2 t{random_rational(rng, 9, 4), random_rational(rng, 9, 4), random_rational(rng, 9, 4),
           random_rational(rng, 9, 4)};
    if (sgn(t.det()) > 0) return {t, kd(rng)};
  }
}

/// Triples from all three patterns at bases of depth <= max_m in [-2, 2].
inline std::vector<ExcTriple> triple_pool(int max_m) {
  std::vector<ExcTriple> out;
  for (const auto& base : labels_between(Rational(-2), Rational(2), max_m)) {
    for (auto pattern : {TriplePattern::Adjacent, TriplePattern::RightExtended, TriplePattern::LeftExtended}) {
      out.push_back(triple_from(pattern, base));
    }
  }
  return out;
}

}  // namespace stabscope::testing
