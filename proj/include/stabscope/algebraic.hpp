#pragma once

// The chart Theta_E of algebraic stability conditions built on an
// exceptional triple E = <E1, E2, E3>: Z(E_j) = m_j exp(i pi phi_j) with
// phi1 < phi2 < phi3 and phi1 + 1 < phi3.
//
// Each slot is an ExactPhase, which carries the complex value m_j e^{i pi
// phi_j} exactly together with the integer part of phi_j; comparisons of
// phases and gaps are therefore exact whenever the values are rational.

#include "stabscope/geometric.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace stabscope {

struct ThetaParams {
  std::array<ExactPhase, 3> slot;

  static ThetaParams from_doubles(const std::array<double, 3>& m, const std::array<double, 3>& phi);
  /// Exact form: m_j rational and phi_j = k_j + theta_j, theta_j in [0, 1),
  /// with exp(i pi phi_j) = (c_j, s_j) a rational unit vector.
  static ThetaParams from_units(const std::array<Rational, 3>& m, const std::array<long, 3>& k,
                                const std::array<Complex, 3>& unit);

  std::array<Complex, 3> values() const { return {slot[0].value(), slot[1].value(), slot[2].value()}; }
  double m(std::size_t j) const { return slot[j].magnitude(); }
  double phi(std::size_t j) const { return slot[j].approx(); }

  friend bool operator==(const ThetaParams&, const ThetaParams&) = default;
};

/// m_j > 0, phi1 < phi2 < phi3 and phi1 + 1 < phi3.
bool validate_params(const ThetaParams& p);

/// phi_b - phi_a compared with an integer n: sign of (phi_b - phi_a - n).
int gap_sign(const ExactPhase& a, const ExactPhase& b, long n);

/// The charge with Z(E_j) = values_j. Throws InvariantError if the
/// characters do not form a basis.
GeneralCharge charge_from_params(const ExcTriple& t, const ThetaParams& p);

/// Triangle e1, e2, e3: edges e1e2 and e2e3 included, edge e3e1 and all
/// vertices excluded.
Polygon tr_polygon(const ExcTriple& t);
/// Open pentagon e1, e+1, e2, e+3, e3.
Polygon mz_polygon(const ExcTriple& t);

enum class CellLabel { GeoCell, PlusLeg, MinusLeg, PureCell, Unknown };

std::string to_string(CellLabel c);

struct CellResult {
  CellLabel label = CellLabel::Unknown;
  int depth = 0;
  std::optional<KernelPoint> kernel;
  std::optional<RegionClass> kernel_region;
  bool kernel_in_mz = false;
  bool orientation_positive = false;
  /// Short reason naming the phase gap or test that decided the label.
  std::string certificate;
};

/// Pure when both gaps are >= 1. Otherwise GeoCell when the kernel of Z is
/// a finite point inside the MZ pentagon and Geo_LP, the frame Z = g o
/// Z_{s,q} is orientation preserving and phi3 - phi1 < 2 (the phase lift of
/// a geometric condition keeps the three bundles within two units). Failing
/// that, PlusLeg if phi3 - phi2 < 1, else MinusLeg. Unknown when Geo_LP
/// membership of the kernel cannot be decided at this depth.
/// Throws std::invalid_argument for invalid parameters.
CellResult classify_cell(const ExcTriple& t, const ThetaParams& p, int depth);

/// The stable objects at a pure point: E_i[n] for i = 1, 2, 3 and every n.
struct PureStableSet {
  std::array<ShiftedChar, 3> generators;  // shift 0; the family is all shifts
  std::string description;
};

PureStableSet stable_set_pure(const ExcTriple& t);

/// An element of the universal cover of GL+(2, R): a matrix T with det > 0
/// and the lift f of its action on phases fixed by
/// f(0) = 2k + Arg(T e1)/pi, Arg in (-pi, pi].
struct GLElement {
  Mat2 t;
  long k = 0;

  static GLElement identity() { return {Mat2::identity(), 0}; }
};

/// f applied to one phase.
ExactPhase gl_act_phase(const GLElement& g, const ExactPhase& phi);
/// Applies g to every slot.
ThetaParams gl_act(const GLElement& g, const ThetaParams& p);
/// g^{-1}, with lift chosen so that g^{-1}(g(x)) = x.
GLElement inverse(const GLElement& g);

struct Transported {
  ExcTriple triple;
  ThetaParams params;
};

/// Moves a point of Theta_E with phi2 - phi1 > 1 and phi3 - phi2 < 1 to the
/// chart of <E1, L_{E2}E3, E2>, keeping the charge. Throws
/// std::domain_error("not in the identified patch") otherwise.
Transported transport_plus_leg(const ExcTriple& t, const ThetaParams& p);

/// Inverse: from <E'1, E'2, E'3> with phi'3 - phi'2 < 1 and phi'3 - phi'1 > 1
/// back to <E'1, E'3, R_{E'3}E'2>.
Transported transport_plus_leg_inverse(const ExcTriple& t, const ThetaParams& p);

/// The unique phase of z strictly between lo and hi (hi - lo <= 1).
/// Throws InvariantError if there is none.
ExactPhase branch_between(const Complex& z, const ExactPhase& lo, const ExactPhase& hi);

}  // namespace stabscope
