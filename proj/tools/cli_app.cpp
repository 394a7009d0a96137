#include "cli_app.hpp"

#include "emit.hpp"
#include "stabscope/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <future>
#include <ostream>
#include <thread>

namespace stabscope::cli {

namespace {

constexpr int kDefaultDepth = 8;

/// Bad option values detected after CLI11 has accepted the command line.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int env_depth() {
  const char* env = std::getenv("STABSCOPE_DEPTH");
  if (env == nullptr || *env == '\0') return kDefaultDepth;
  const std::string text(env);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 6)
    throw UsageError("STABSCOPE_DEPTH must be a non-negative integer");
  return std::stoi(text);
}

int resolve_depth(int flag) { return flag >= 0 ? flag : env_depth(); }

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

std::vector<Rational> rationals(std::string_view text, std::size_t n, const std::string& what) {
  const auto parts = split(text, ',');
  if (parts.size() != n) throw UsageError(what + " expects " + std::to_string(n) + " comma-separated values");
  std::vector<Rational> out;
  for (const auto& p : parts) out.push_back(parse_rational(p));
  return out;
}

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("malformed number: '" + text + "'");
  }
  if (used != text.size()) throw ParseError("malformed number: '" + text + "'");
  return x;
}

Complex parse_complex(const std::string& text, const std::string& what) {
  const auto v = rationals(text, 2, what);
  return {v[0], v[1]};
}

/// "adj:1", "right:1/2", or three labels "0,1,2".
ExcTriple parse_triple(const std::string& text) {
  if (auto colon = text.find(':'); colon != std::string::npos) {
    return triple_from(parse_pattern(text.substr(0, colon)), DyadicLabel::parse(text.substr(colon + 1)));
  }
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw ParseError("triple must be pattern:base or three labels");
  const std::array<DyadicLabel, 3> labels{DyadicLabel::parse(parts[0]), DyadicLabel::parse(parts[1]),
                                          DyadicLabel::parse(parts[2])};
  const auto id = identify_pattern(labels);
  if (!id) throw InvariantError("labels do not form an exceptional triple");
  return triple_from(id->first, id->second);
}

struct ParamOptions {
  std::string m;
  std::string phi;
  std::string units;
};

/// Floats with --phi, or exact input with --exact-units "k:c,s;k:c,s;k:c,s"
/// where exp(i pi phi_j) = (c_j, s_j) and phi_j lies in [k_j, k_j + 1).
ThetaParams parse_params(const ParamOptions& o) {
  if (o.phi.empty() == o.units.empty()) throw UsageError("give exactly one of --phi and --exact-units");
  if (!o.phi.empty()) {
    const auto ms = split(o.m, ','), ps = split(o.phi, ',');
    if (ms.size() != 3 || ps.size() != 3) throw UsageError("--m and --phi expect three values each");
    return ThetaParams::from_doubles({parse_double(ms[0]), parse_double(ms[1]), parse_double(ms[2])},
                                     {parse_double(ps[0]), parse_double(ps[1]), parse_double(ps[2])});
  }
  const auto m = rationals(o.m, 3, "--m");
  const auto slots = split(o.units, ';');
  if (slots.size() != 3) throw UsageError("--exact-units expects three k:c,s entries");
  std::array<long, 3> k{};
  std::array<Complex, 3> unit;
  for (std::size_t j = 0; j < 3; ++j) {
    const auto colon = slots[j].find(':');
    if (colon == std::string::npos) throw ParseError("unit entry must be k:c,s");
    const Rational kr = parse_rational(slots[j].substr(0, colon));
    if (kr.get_den() != 1 || !kr.get_num().fits_slong_p()) throw ParseError("unit floor must be an integer");
    k[j] = kr.get_num().get_si();
    unit[j] = parse_complex(slots[j].substr(colon + 1), "unit vector");
  }
  const ThetaParams p = ThetaParams::from_units({m[0], m[1], m[2]}, k, unit);
  if (!validate_params(p)) throw std::invalid_argument("parameters violate phi1 < phi2 < phi3, phi1 + 1 < phi3");
  return p;
}

Json labels_json(const ExcTriple& t) {
  Json out = Json::array();
  for (const auto& l : t.labels()) out.push_back(l.str());
  return out;
}

enum class Format { Json, Csv, Svg };

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "svg") return Format::Svg;
  throw UsageError("format must be json, csv or svg");
}

std::vector<PlotRow> curve_rows(const CurveApprox& c) {
  std::vector<PlotRow> rows;
  for (const auto& s : c.segments) {
    rows.push_back({s.a.x.to_double(), s.a.y.to_double(), s.b.x.to_double(), s.b.y.to_double(),
                    s.side == CurveSide::Left ? "left" : "right", s.label.str()});
  }
  for (const auto& e : c.exclusions) {
    rows.push_back({e.top.x.to_double(), e.top.y.to_double(), e.bottom.x.to_double(), e.bottom.y.to_double(),
                    "exclusion", e.label.str()});
  }
  return rows;
}

/// Rows labelled "partner:equation"; distinct partners may share a wall.
std::vector<PlotRow> wall_rows(const std::vector<WallLine>& walls, const std::vector<ExcBundle>& pool) {
  std::vector<PlotRow> rows;
  for (const auto& w : walls) {
    const auto partner = std::find_if(pool.begin(), pool.end(), [&](const ExcBundle& e) { return e.chr == w.w; });
    const auto& [a, b] = *w.clipped;
    rows.push_back({a.x.to_double(), a.y.to_double(), b.x.to_double(), b.y.to_double(), "wall",
                    partner->label.str() + ":" + w.equation()});
  }
  return rows;
}

std::string stab_verdict(const ExcBundle& e, const AffPt& p, int depth) {
  if (classify_point(p, depth).kind != RegionClass::GeoLP) return "NotGeoLP";
  return to_string(exc_stable_at(e, p, depth));
}

/// Raster rows computed in parallel and emitted in index order.
std::vector<std::string> stab_raster(const ExcBundle& e, const std::vector<Rational>& g, long n, int depth) {
  const Rational dx = (g[1] - g[0]) / (n - 1), dy = (g[3] - g[2]) / (n - 1);
  auto row = [&](long j) {
    std::string text;
    const Rational q = g[2] + dy * j;
    for (long i = 0; i < n; ++i) {
      const Rational s = g[0] + dx * i;
      text += to_string(s) + "," + to_string(q) + "," + stab_verdict(e, make_point(s, q), depth) + "\n";
    }
    return text;
  };
  const long workers = std::max(1L, std::min<long>(n, std::thread::hardware_concurrency()));
  std::vector<std::string> rows(static_cast<std::size_t>(n));
  std::vector<std::future<void>> jobs;
  for (long w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (long j = w; j < n; j += workers) rows[static_cast<std::size_t>(j)] = row(j);
    }));
  }
  for (auto& job : jobs) job.get();
  return rows;
}

void print(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for stability conditions on the projective plane", "stabscope"};
  app.require_subcommand(1);
  std::function<int()> action;

  int depth = -1;
  bool strict = false;
  std::string format = "json";
  auto add_depth = [&](CLI::App* sub) {
    sub->add_option("--depth", depth, "label depth (default: STABSCOPE_DEPTH or 8)")->check(CLI::NonNegativeNumber);
  };
  auto add_strict = [&](CLI::App* sub) { sub->add_flag("--strict", strict, "exit 3 on Unknown verdicts"); };

  // exc
  auto* exc = app.add_subcommand("exc", "exceptional bundles by label");
  exc->require_subcommand(1);
  std::string label_text;
  auto* exc_char = exc->add_subcommand("char", "character of E_label");
  exc_char->add_option("label", label_text, "label p/2^m")->required();
  exc_char->callback([&] {
    action = [&] {
      print(out, Json{{"char", to_json(char_of(DyadicLabel::parse(label_text)))}});
      return kExitOk;
    };
  });
  auto* exc_points = exc->add_subcommand("points", "e, e+, e^l, e^r of a label");
  exc_points->add_option("label", label_text, "label p/2^m")->required();
  exc_points->callback([&] {
    action = [&] {
      const auto l = DyadicLabel::parse(label_text);
      print(out, Json{{"label", l.str()},
                      {"char", to_json(char_of(l))},
                      {"rank", rank_of(l).get_str()},
                      {"e", to_json(e_point(l))},
                      {"eplus", to_json(eplus(l))},
                      {"el", to_json(el(l))},
                      {"er", to_json(er(l))}});
      return kExitOk;
    };
  });

  // curve
  auto* curve = app.add_subcommand("curve", "the Le Potier curve");
  curve->require_subcommand(1);
  std::string from_text = "-2", to_text = "2";
  auto* emit = curve->add_subcommand("emit", "curve segments and exclusion segments over a slope window");
  add_depth(emit);
  emit->add_option("--from", from_text, "left end of the slope window");
  emit->add_option("--to", to_text, "right end of the slope window");
  emit->add_option("--format", format, "json, csv or svg");
  emit->callback([&] {
    action = [&] {
      const Format f = parse_format(format);
      const Rational lo = parse_rational(from_text), hi = parse_rational(to_text);
      if (lo > hi) throw UsageError("--from must not exceed --to");
      const CurveApprox c = build_curve(resolve_depth(depth), lo, hi);
      if (f == Format::Json) print(out, to_json(c));
      if (f == Format::Csv) out << emit_csv(curve_rows(c));
      if (f == Format::Svg) out << emit_svg(curve_rows(c), {lo.get_d(), hi.get_d()});
      return kExitOk;
    };
  });

  // classify-point
  std::string x_text, y_text;
  auto* cpoint = app.add_subcommand("classify-point", "position of (x, y) relative to Geo_LP");
  cpoint->add_option("--x", x_text, "ch1/ch0")->required();
  cpoint->add_option("--y", y_text, "ch2/ch0")->required();
  add_depth(cpoint);
  add_strict(cpoint);
  cpoint->callback([&] {
    action = [&] {
      const RegionClass r = classify_point(make_point(parse_rational(x_text), parse_rational(y_text)), resolve_depth(depth));
      Json j{{"class", to_string(r.kind)}};
      if (r.kind == RegionClass::Unknown) j["depth_reached"] = r.depth_reached;
      print(out, j);
      return (strict && r.kind == RegionClass::Unknown) ? kExitUnknown : kExitOk;
    };
  });

  // dlp
  std::string ch0_text, ch1_text, ch2_text;
  auto* dlp = app.add_subcommand("dlp", "existence of semistable sheaves with a given character");
  dlp->add_option("--ch0", ch0_text)->required();
  dlp->add_option("--ch1", ch1_text)->required();
  dlp->add_option("--ch2", ch2_text)->required();
  add_depth(dlp);
  add_strict(dlp);
  dlp->callback([&] {
    action = [&] {
      const CharVec v{parse_rational(ch0_text), parse_rational(ch1_text), parse_rational(ch2_text)};
      const Existence e = dlp_exists(v, resolve_depth(depth));
      print(out, Json{{"exists", to_string(e)}});
      return (strict && e == Existence::Unknown) ? kExitUnknown : kExitOk;
    };
  });

  // charge
  auto* charge = app.add_subcommand("charge", "central charges");
  charge->require_subcommand(1);
  std::string s_text, q_text;
  auto* ceval = charge->add_subcommand("eval", "Z_{s,q} of a character");
  ceval->add_option("--s", s_text)->required();
  ceval->add_option("--q", q_text)->required();
  ceval->add_option("--ch0", ch0_text)->required();
  ceval->add_option("--ch1", ch1_text)->required();
  ceval->add_option("--ch2", ch2_text)->required();
  ceval->callback([&] {
    action = [&] {
      const SQCharge z{parse_rational(s_text), parse_rational(q_text)};
      const CharVec v{parse_rational(ch0_text), parse_rational(ch1_text), parse_rational(ch2_text)};
      const Complex value = z_eval(z, v);
      Json j{{"z", to_json(value)}};
      j["phase"] = value.is_zero() ? Json(nullptr) : to_json(ExactPhase::of(value));
      print(out, j);
      return kExitOk;
    };
  });
  std::string c0_text, c1_text, c2_text;
  auto* cnorm = charge->add_subcommand("normalize", "kernel point and Z = g o Z_{s,q}");
  cnorm->add_option("--c0", c0_text, "re,im coefficient of ch0")->required();
  cnorm->add_option("--c1", c1_text, "re,im coefficient of ch1")->required();
  cnorm->add_option("--c2", c2_text, "re,im coefficient of ch2")->required();
  add_depth(cnorm);
  cnorm->callback([&] {
    action = [&] {
      const GeneralCharge z{parse_complex(c0_text, "--c0"), parse_complex(c1_text, "--c1"),
                            parse_complex(c2_text, "--c2")};
      Json j{{"kernel", to_json(kernel_point(z))}};
      const auto n = normalize_charge(z, resolve_depth(depth));
      j["normalized"] = n ? Json{{"s", to_json(n->s)}, {"q", to_json(n->q)}, {"g", to_json(n->g)}} : Json(nullptr);
      print(out, j);
      return kExitOk;
    };
  });

  // stab-region
  std::string grid_text;
  auto* region = app.add_subcommand("stab-region", "raster of exc_stable_at over a grid of (s, q)");
  region->add_option("--label", label_text, "label p/2^m")->required();
  region->add_option("--grid", grid_text, "x0,x1,y0,y1,n")->required();
  add_depth(region);
  add_strict(region);
  region->callback([&] {
    action = [&] {
      const auto parts = split(grid_text, ',');
      if (parts.size() != 5) throw UsageError("--grid expects x0,x1,y0,y1,n");
      std::vector<Rational> g;
      for (std::size_t i = 0; i < 4; ++i) g.push_back(parse_rational(parts[i]));
      const Rational nr = parse_rational(parts[4]);
      if (nr.get_den() != 1 || nr < 2 || nr > 10000) throw UsageError("grid size n must be an integer in [2, 10000]");
      const auto rows = stab_raster(ExcBundle::of(DyadicLabel::parse(label_text)), g, nr.get_num().get_si(),
                                    resolve_depth(depth));
      bool unknown = false;
      out << "s,q,verdict\n";
      for (const auto& r : rows) {
        out << r;
        unknown = unknown || r.find(",Unknown\n") != std::string::npos;
      }
      return (strict && unknown) ? kExitUnknown : kExitOk;
    };
  });

  // triple
  auto* triple = app.add_subcommand("triple", "exceptional triples");
  triple->require_subcommand(1);
  std::string pattern_text, base_text;
  auto* tmake = triple->add_subcommand("make", "triple of a pattern at a base label");
  tmake->add_option("--pattern", pattern_text, "adj, right or left")->required();
  tmake->add_option("--base", base_text, "base label p/2^m")->required();
  tmake->callback([&] {
    action = [&] {
      print(out, to_json(triple_from(parse_pattern(pattern_text), DyadicLabel::parse(base_text))));
      return kExitOk;
    };
  });

  // mutate
  auto* mutate = app.add_subcommand("mutate", "left or right mutation of a triple");
  mutate->require_subcommand(1);
  std::string triple_text, slot_text = "second";
  for (const char* side : {"left", "right"}) {
    auto* sub = mutate->add_subcommand(side, std::string(side) + " mutation");
    sub->add_option("--triple", triple_text, "pattern:base or l1,l2,l3")->required();
    sub->add_option("--slot", slot_text, "second (positions 2-3) or first (positions 1-2)");
    const bool left = std::string(side) == "left";
    sub->callback([&, left] {
      action = [&, left] {
        if (slot_text != "first" && slot_text != "second") throw UsageError("--slot must be first or second");
        const MutationSlot slot = slot_text == "first" ? MutationSlot::First : MutationSlot::Second;
        const ExcTriple t = parse_triple(triple_text);
        print(out, to_json(left ? mutate_left(t, slot) : mutate_right(t, slot)));
        return kExitOk;
      };
    });
  }

  // classify-cell and transport share the chart parameters.
  ParamOptions params;
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--triple", triple_text, "pattern:base or l1,l2,l3")->required();
    sub->add_option("--m", params.m, "m1,m2,m3")->required();
    sub->add_option("--phi", params.phi, "phi1,phi2,phi3 as floats");
    sub->add_option("--exact-units", params.units, "k:c,s;k:c,s;k:c,s with exp(i pi phi) = (c, s)");
  };
  auto* ccell = app.add_subcommand("classify-cell", "cell label of a point of the algebraic chart");
  add_params(ccell);
  add_depth(ccell);
  add_strict(ccell);
  ccell->callback([&] {
    action = [&] {
      const ExcTriple t = parse_triple(triple_text);
      const ThetaParams p = parse_params(params);
      const CellResult r = classify_cell(t, p, resolve_depth(depth));
      Json j{{"triple", labels_json(t)}, {"params", to_json(p)}};
      j.update(to_json(r));
      print(out, j);
      return (strict && r.label == CellLabel::Unknown) ? kExitUnknown : kExitOk;
    };
  });

  bool inverse = false;
  auto* transport = app.add_subcommand("transport", "move a plus-leg point to the mutated chart");
  add_params(transport);
  transport->add_flag("--inverse", inverse, "move back from the mutated chart");
  transport->callback([&] {
    action = [&] {
      const ExcTriple t = parse_triple(triple_text);
      const ThetaParams p = parse_params(params);
      const Transported r = inverse ? transport_plus_leg_inverse(t, p) : transport_plus_leg(t, p);
      print(out, Json{{"triple", to_json(r.triple)}, {"params", to_json(r.params)}});
      return kExitOk;
    };
  });

  // wall, walls
  std::string v_text, w_text;
  auto* wall = app.add_subcommand("wall", "wall line of two classes");
  wall->add_option("--v", v_text, "ch0,ch1,ch2")->required();
  wall->add_option("--w", w_text, "ch0,ch1,ch2")->required();
  wall->callback([&] {
    action = [&] {
      print(out, Json{{"line", wall_line(parse_char(v_text), parse_char(w_text)).equation()}});
      return kExitOk;
    };
  });

  int pool_depth = 0;
  std::string window_text = "-2,2,-3,1";
  auto* walls = app.add_subcommand("walls", "walls of a class against exceptional bundles in a window");
  walls->add_option("--v", v_text, "ch0,ch1,ch2")->required();
  walls->add_option("--pool-depth", pool_depth, "label depth of the pool")->check(CLI::Range(0, 12));
  walls->add_option("--window", window_text, "s0,s1,q0,q1");
  walls->add_option("--format", format, "json, csv or svg");
  walls->callback([&] {
    action = [&] {
      const Format f = parse_format(format);
      const CharVec v = parse_char(v_text);
      const auto w = rationals(window_text, 4, "--window");
      if (w[0] >= w[1] || w[2] >= w[3]) throw UsageError("window must have s0 < s1 and q0 < q1");
      std::vector<ExcBundle> pool;
      for (const auto& l : labels_between(w[0] - 1, w[1] + 1, pool_depth)) pool.push_back(ExcBundle::of(l));
      const auto found = walls_for(v, pool, {w[0], w[1], w[2], w[3]});
      if (f == Format::Json) {
        Json list = Json::array();
        for (const auto& x : found) list.push_back(to_json(x));
        print(out, Json{{"v", to_json(v)}, {"walls", list}});
      }
      if (f == Format::Csv) out << emit_csv(wall_rows(found, pool));
      if (f == Format::Svg) out << emit_svg(wall_rows(found, pool), {w[0].get_d(), w[1].get_d()});
      return kExitOk;
    };
  });

  if (!args.empty() && !args.front().starts_with('-')) {
    bool known = false;
    for (const auto* sub : app.get_subcommands({})) known = known || sub->check_name(args.front());
    if (!known) {
      print(err, Json{{"error", "unknown verb: " + args.front()}});
      return kExitUsage;
    }
  }

  std::vector<const char*> argv{"stabscope"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    print(err, Json{{"error", e.what()}});
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const ParseError& e) {
    print(err, Json{{"error", e.what()}});
    return kExitUsage;
  } catch (const UsageError& e) {
    print(err, Json{{"error", e.what()}});
    return kExitUsage;
  } catch (const std::exception& e) {
    print(err, Json{{"error", e.what()}});
    return kExitFailure;
  }
}

}  // namespace stabscope::cli
