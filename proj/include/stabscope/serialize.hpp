#pragma once

// JSON forms: rationals as "p" / "p/q" strings, QuadReal as
// {"a": "p/q", "b": "p/q", "d": n}, CharVec as a three-string array.

#include "stabscope/algebraic.hpp"
#include "stabscope/lepotier.hpp"
#include "stabscope/walls.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace stabscope {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const QuadReal& x);
Json to_json(const CharVec& v);
Json to_json(const AffPt& p);
Json to_json(const Complex& z);
Json to_json(const Mat2& g);
Json to_json(const ExactPhase& phi);
Json to_json(const ExcTriple& t);
Json to_json(const ThetaParams& p);
Json to_json(const CellResult& c);
Json to_json(const KernelPoint& k);
Json to_json(const CurveApprox& c);
Json to_json(const WallLine& w);
Json to_json(const PureStableSet& s);

Rational rational_from_json(const Json& j);
QuadReal quad_from_json(const Json& j);
CharVec char_from_json(const Json& j);
PureStableSet pure_set_from_json(const Json& j);

/// "%.17g" rendering used by every CSV and SVG emitter.
std::string format_double(double x);

/// Parses "a,b,c" into three rationals.
CharVec parse_char(std::string_view text);

}  // namespace stabscope
