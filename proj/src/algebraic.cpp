#include "stabscope/algebraic.hpp"

#include <stdexcept>

namespace stabscope {

ThetaParams ThetaParams::from_doubles(const std::array<double, 3>& m, const std::array<double, 3>& phi) {
  ThetaParams p;
  for (std::size_t j = 0; j < 3; ++j) {
    if (!(m[j] > 0)) throw std::invalid_argument("masses must be positive");
    p.slot[j] = ExactPhase::from_double(m[j], phi[j]);
  }
  return p;
}

ThetaParams ThetaParams::from_units(const std::array<Rational, 3>& m, const std::array<long, 3>& k,
                                    const std::array<Complex, 3>& unit) {
  ThetaParams p;
  for (std::size_t j = 0; j < 3; ++j) {
    if (sgn(m[j]) <= 0) throw std::invalid_argument("masses must be positive");
    if (unit[j].re * unit[j].re + unit[j].im * unit[j].im != 1) throw std::invalid_argument("phase vector is not a unit vector");
    p.slot[j] = ExactPhase::from_floor(m[j] * unit[j], k[j]);
  }
  return p;
}

int gap_sign(const ExactPhase& a, const ExactPhase& b, long n) {
  const auto c = b <=> a.shifted(n);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

bool validate_params(const ThetaParams& p) {
  for (const auto& s : p.slot) {
    if (s.value().is_zero()) return false;
  }
  return gap_sign(p.slot[0], p.slot[1], 0) > 0 && gap_sign(p.slot[1], p.slot[2], 0) > 0 &&
         gap_sign(p.slot[0], p.slot[2], 1) > 0;
}

GeneralCharge charge_from_params(const ExcTriple& t, const ThetaParams& p) {
  const auto c = t.chars();
  const Rational d = det3(c[0], c[1], c[2]);
  if (d == 0) throw InvariantError("triple characters are not a basis");
  // Columns of the inverse matrix are the pairwise cross products over det.
  const std::array<CharVec, 3> cols{cross(c[1], c[2]), cross(c[2], c[0]), cross(c[0], c[1])};
  const auto z = p.values();
  std::array<Complex, 3> coeff;
  for (std::size_t i = 0; i < 3; ++i) {
    Complex sum{Rational(0), Rational(0)};
    for (std::size_t j = 0; j < 3; ++j) {
      const Rational& entry = (i == 0) ? cols[j].ch0 : (i == 1) ? cols[j].ch1 : cols[j].ch2;
      sum = sum + (entry / d) * z[j];
    }
    coeff[i] = sum;
  }
  return {coeff[0], coeff[1], coeff[2]};
}

Polygon tr_polygon(const ExcTriple& t) {
  const auto c = t.chars();
  return {{project(c[0]), project(c[1]), project(c[2])}, {true, true, false}, {false, false, false}};
}

Polygon mz_polygon(const ExcTriple& t) {
  const auto l = t.labels();
  return Polygon::open({e_point(l[0]), eplus(l[0]), e_point(l[1]), eplus(l[2]), e_point(l[2])});
}

std::string to_string(CellLabel c) {
  switch (c) {
    case CellLabel::GeoCell: return "GeoCell";
    case CellLabel::PlusLeg: return "PlusLeg";
    case CellLabel::MinusLeg: return "MinusLeg";
    case CellLabel::PureCell: return "PureCell";
    case CellLabel::Unknown: return "Unknown";
  }
  return "?";
}

CellResult classify_cell(const ExcTriple& t, const ThetaParams& p, int depth) {
  if (!validate_params(p)) throw std::invalid_argument("invalid chart parameters");
  CellResult out;
  out.depth = depth;
  const int g21 = gap_sign(p.slot[0], p.slot[1], 1);
  const int g32 = gap_sign(p.slot[1], p.slot[2], 1);
  if (g21 >= 0 && g32 >= 0) {
    out.label = CellLabel::PureCell;
    out.certificate = "phi2-phi1>=1 and phi3-phi2>=1";
    return out;
  }

  const GeneralCharge z = charge_from_params(t, p);
  if (is_degenerate(z)) throw InvariantError("degenerate charge outside the pure cell");
  out.kernel = kernel_point(z);
  out.orientation_positive = sgn(charge_frame(z).det()) > 0;
  const bool span_ok = gap_sign(p.slot[0], p.slot[2], 2) < 0;

  std::string failed;
  if (!out.kernel->affine) {
    failed = "kernel at infinity";
  } else {
    const AffPt& k = *out.kernel->affine;
    out.kernel_in_mz = point_in_polygon(k, mz_polygon(t));
    out.kernel_region = classify_point(k, depth);
    if (!out.kernel_in_mz) {
      failed = "kernel outside MZ";
    } else if (!out.orientation_positive) {
      failed = "orientation reversed";
    } else if (!span_ok) {
      failed = "phi3-phi1>=2";
    } else if (out.kernel_region->kind == RegionClass::GeoLP) {
      out.label = CellLabel::GeoCell;
      out.certificate = "kernel in MZ and Geo_LP";
      return out;
    } else if (out.kernel_region->kind == RegionClass::Unknown) {
      out.label = CellLabel::Unknown;
      out.certificate = "kernel undecided at depth " + std::to_string(depth);
      return out;
    } else {
      failed = "kernel " + to_string(out.kernel_region->kind);
    }
  }
  if (g32 < 0) {
    out.label = CellLabel::PlusLeg;
    out.certificate = failed + "; phi3-phi2<1";
  } else {
    out.label = CellLabel::MinusLeg;
    out.certificate = failed + "; phi2-phi1<1";
  }
  return out;
}

PureStableSet stable_set_pure(const ExcTriple& t) {
  const auto c = t.chars();
  return {{ShiftedChar{c[0], 0}, ShiftedChar{c[1], 0}, ShiftedChar{c[2], 0}}, "E_i[n] for i = 1, 2, 3 and n in Z"};
}

// ---------------------------------------------------------------------------
// Group action

namespace {

// w in U after flipping, and the flip: Arg(w)/pi = off + theta(u).
std::pair<Complex, long> to_upper(const Complex& w) {
  if (in_upper(w)) return {w, 0};
  return {-w, -1};
}

bool principal_greater(const std::pair<Complex, long>& x, const std::pair<Complex, long>& y) {
  if (x.second != y.second) return x.second > y.second;
  return sgn(cross(y.first, x.first)) > 0;
}

}  // namespace

ExactPhase gl_act_phase(const GLElement& g, const ExactPhase& phi) {
  if (sgn(g.t.det()) <= 0) throw std::invalid_argument("group element must have positive determinant");
  const auto image = to_upper(g.t.apply(phi.unit_rep()));
  const auto base = to_upper(g.t.apply({Rational(1), Rational(0)}));
  const long turn = phi.turn() + 2 * g.k + image.second + (principal_greater(image, base) ? 0 : 2);
  return ExactPhase::with_turn(g.t.apply(phi.value()), turn);
}

ThetaParams gl_act(const GLElement& g, const ThetaParams& p) {
  ThetaParams out;
  for (std::size_t j = 0; j < 3; ++j) out.slot[j] = gl_act_phase(g, p.slot[j]);
  return out;
}

GLElement inverse(const GLElement& g) {
  const ExactPhase zero = ExactPhase::from_floor({Rational(1), Rational(0)}, 0);
  GLElement inv{g.t.inverse(), 0};
  const ExactPhase back = gl_act_phase(inv, gl_act_phase(g, zero));
  // back = 2j exactly, represented as turn 2j - 1 with a negative real rep.
  const long twice = back.turn() + 1;
  if (twice % 2 != 0) throw InvariantError("inverse lift is not an even turn");
  inv.k = -twice / 2;
  return inv;
}

// ---------------------------------------------------------------------------
// Transport

ExactPhase branch_between(const Complex& z, const ExactPhase& lo, const ExactPhase& hi) {
  const ExactPhase base = ExactPhase::of(z, 0);
  const long d = (lo.turn() - base.turn()) / 2;
  std::optional<ExactPhase> found;
  for (long j = d - 2; j <= d + 2; ++j) {
    const ExactPhase cand = base.shifted(2 * j);
    if (lo < cand && cand < hi) {
      if (found) throw InvariantError("two phase branches in the window");
      found = cand;
    }
  }
  if (!found) throw InvariantError("no phase branch in the window");
  return *found;
}

Transported transport_plus_leg(const ExcTriple& t, const ThetaParams& p) {
  if (!validate_params(p)) throw std::invalid_argument("invalid chart parameters");
  if (gap_sign(p.slot[0], p.slot[1], 1) <= 0 || gap_sign(p.slot[1], p.slot[2], 1) >= 0)
    throw std::domain_error("not in the identified patch");
  const auto c = t.chars();
  const Rational chi = euler_chi(c[1], c[2]);
  const Complex z2 = chi * p.slot[1].value() - p.slot[2].value();
  const ExcTriple moved = mutate_left(t);
  if (moved.chars()[1] != chi * c[1] - c[2]) throw InvariantError("mutation class mismatch");
  ThetaParams q;
  q.slot[0] = p.slot[0];
  q.slot[1] = branch_between(z2, p.slot[2].shifted(-1), p.slot[1]);
  q.slot[2] = p.slot[1];
  if (!validate_params(q)) throw InvariantError("transported parameters are invalid");
  return {moved, q};
}

Transported transport_plus_leg_inverse(const ExcTriple& t, const ThetaParams& p) {
  if (!validate_params(p)) throw std::invalid_argument("invalid chart parameters");
  if (gap_sign(p.slot[1], p.slot[2], 1) >= 0 || gap_sign(p.slot[0], p.slot[2], 1) <= 0)
    throw std::domain_error("not in the identified patch");
  const auto c = t.chars();
  const Rational chi = euler_chi(c[1], c[2]);
  const Complex z3 = chi * p.slot[2].value() - p.slot[1].value();
  const ExcTriple moved = mutate_right(t);
  if (moved.chars()[2] != chi * c[2] - c[1]) throw InvariantError("mutation class mismatch");
  ThetaParams q;
  q.slot[0] = p.slot[0];
  q.slot[1] = p.slot[2];
  q.slot[2] = branch_between(z3, p.slot[2], p.slot[1].shifted(1));
  if (!validate_params(q)) throw InvariantError("transported parameters are invalid");
  return {moved, q};
}

}  // namespace stabscope
