#include "stabscope/serialize.hpp"

#include <cstdio>

namespace stabscope {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const QuadReal& x) {
  // Radicands beyond 64 bits fall back to a decimal string.
  Json d = x.d().fits_slong_p() ? Json(x.d().get_si()) : Json(x.d().get_str());
  return Json{{"a", to_string(x.a())}, {"b", to_string(x.b())}, {"d", d}};
}

Json to_json(const CharVec& v) { return Json::array({to_string(v.ch0), to_string(v.ch1), to_string(v.ch2)}); }

Json to_json(const AffPt& p) { return Json{{"x", to_json(p.x)}, {"y", to_json(p.y)}}; }

Json to_json(const Complex& z) { return Json{{"re", to_string(z.re)}, {"im", to_string(z.im)}}; }

Json to_json(const Mat2& g) {
  return Json::array({Json::array({to_string(g.a), to_string(g.b)}), Json::array({to_string(g.c), to_string(g.d)})});
}

Json to_json(const ExactPhase& phi) {
  return Json{{"value", to_json(phi.value())}, {"turn", phi.turn()}, {"phi", phi.approx()}, {"m", phi.magnitude()}};
}

Json to_json(const ExcTriple& t) {
  Json labels = Json::array(), chars = Json::array();
  for (const auto& b : t.bundles) {
    labels.push_back(b.label.str());
    chars.push_back(to_json(b.chr));
  }
  return Json{{"pattern", to_string(t.pattern)}, {"base", t.base.str()}, {"labels", labels}, {"chars", chars}};
}

Json to_json(const ThetaParams& p) {
  Json out = Json::array();
  for (const auto& s : p.slot) out.push_back(to_json(s));
  return out;
}

Json to_json(const KernelPoint& k) {
  Json out{{"direction", to_json(k.direction)}};
  out["point"] = k.affine ? to_json(*k.affine) : Json("infinity");
  return out;
}

Json to_json(const CellResult& c) {
  Json out{{"label", to_string(c.label)}, {"certificate", c.certificate}};
  if (c.label == CellLabel::Unknown) out["depth"] = c.depth;
  if (c.kernel) {
    out["kernel"] = to_json(*c.kernel);
    out["kernel_in_mz"] = c.kernel_in_mz;
    out["orientation_positive"] = c.orientation_positive;
  }
  if (c.kernel_region) out["kernel_region"] = to_string(c.kernel_region->kind);
  return out;
}

Json to_json(const CurveApprox& c) {
  Json segs = Json::array(), excl = Json::array();
  for (const auto& s : c.segments) {
    segs.push_back(Json{{"label", s.label.str()},
                        {"side", s.side == CurveSide::Left ? "left" : "right"},
                        {"a", to_json(s.a)},
                        {"b", to_json(s.b)}});
  }
  for (const auto& e : c.exclusions) {
    excl.push_back(Json{{"label", e.label.str()}, {"top", to_json(e.top)}, {"bottom", to_json(e.bottom)}});
  }
  return Json{{"depth", c.depth},
              {"window", Json::array({to_string(c.lo), to_string(c.hi)})},
              {"segments", segs},
              {"exclusions", excl}};
}

Json to_json(const WallLine& w) {
  Json out{{"line", w.equation()}, {"v", to_json(w.v)}, {"w", to_json(w.w)}, {"coeff", to_json(w.coeff)}};
  if (w.clipped) out["clipped"] = Json::array({to_json(w.clipped->first), to_json(w.clipped->second)});
  return out;
}

Json to_json(const PureStableSet& s) {
  Json gens = Json::array();
  for (const auto& g : s.generators) gens.push_back(to_json(g.chr));
  return Json{{"generators", gens}, {"shifts", "all integers"}, {"description", s.description}};
}

Rational rational_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

QuadReal quad_from_json(const Json& j) {
  return QuadReal(rational_from_json(j.at("a")), rational_from_json(j.at("b")), 
                  j.at("d").is_string() ? Integer(j.at("d").get<std::string>()) : Integer(j.at("d").get<long>()));
}

CharVec char_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("character must be a three-element array");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2])};
}

PureStableSet pure_set_from_json(const Json& j) {
  PureStableSet s;
  const Json& gens = j.at("generators");
  if (!gens.is_array() || gens.size() != 3) throw ParseError("expected three generators");
  for (std::size_t i = 0; i < 3; ++i) s.generators[i] = {char_from_json(gens[i]), 0};
  s.description = j.at("description").get<std::string>();
  return s;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

CharVec parse_char(std::string_view text) {
  std::array<Rational, 3> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t comma = text.find(',', start);
    if ((i < 2) != (comma != std::string_view::npos)) throw ParseError("expected ch0,ch1,ch2: '" + std::string(text) + "'");
    parts[i] = parse_rational(text.substr(start, i < 2 ? comma - start : std::string_view::npos));
    start = comma + 1;
  }
  return {parts[0], parts[1], parts[2]};
}

}  // namespace stabscope
