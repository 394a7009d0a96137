#include "emit.hpp"

#include "stabscope/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace stabscope::cli {

namespace {

constexpr int kParabolaSamples = 200;

double parabola(double x, double delta) { return x * x / 2 - delta; }

}  // namespace

std::string csv_row(const PlotRow& r) {
  return format_double(r.x1) + "," + format_double(r.y1) + "," + format_double(r.x2) + "," + format_double(r.y2) +
         "," + r.kind + "," + r.label;
}

std::string emit_csv(const std::vector<PlotRow>& rows) {
  std::string out = std::string(kPlotHeader) + "\n";
  for (const auto& r : rows) out += csv_row(r) + "\n";
  return out;
}

std::string emit_svg(const std::vector<PlotRow>& rows, const PlotWindow& w) {
  // Vertical extent: the reference parabolas over the window plus the data.
  double ylo = std::min(parabola(w.x0, 1), parabola(w.x1, 1));
  if (w.x0 < 0 && w.x1 > 0) ylo = -1;
  double yhi = std::max(parabola(w.x0, 0), parabola(w.x1, 0));
  for (const auto& r : rows) {
    ylo = std::min({ylo, r.y1, r.y2});
    yhi = std::max({yhi, r.y1, r.y2});
  }
  const double pad = 0.05 * std::max(w.x1 - w.x0, yhi - ylo);
  const double vx = w.x0 - pad, vw = (w.x1 - w.x0) + 2 * pad;
  const double vy = -(yhi + pad), vh = (yhi - ylo) + 2 * pad;

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"" << format_double(vx)
    << ' ' << format_double(vy) << ' ' << format_double(vw) << ' ' << format_double(vh)
    << "\" preserveAspectRatio=\"none\">\n";
  // Flip so that ch2/ch0 grows upward.
  s << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"1.5\">\n";
  for (const auto& [delta, name, color] :
       {std::tuple{0.0, "0", "#999999"}, {0.5, "1/2", "#4477aa"}, {1.0, "1", "#999999"}}) {
    s << "<polyline class=\"reference\" data-delta=\"" << name << "\" stroke=\"" << color
      << "\" vector-effect=\"non-scaling-stroke\" points=\"";
    for (int i = 0; i <= kParabolaSamples; ++i) {
      const double x = w.x0 + (w.x1 - w.x0) * i / kParabolaSamples;
      if (i) s << ' ';
      s << format_double(x) << ',' << format_double(parabola(x, delta));
    }
    s << "\"/>\n";
  }
  for (const auto& r : rows) {
    const char* color = r.kind == "exclusion" ? "#cc3311" : (r.kind == "wall" ? "#228833" : "#000000");
    s << "<line class=\"data\" x1=\"" << format_double(r.x1) << "\" y1=\"" << format_double(r.y1) << "\" x2=\""
      << format_double(r.x2) << "\" y2=\"" << format_double(r.y2) << "\" data-kind=\"" << r.kind
      << "\" data-label=\"" << r.label << "\" stroke=\"" << color << "\" vector-effect=\"non-scaling-stroke\"/>\n";
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

}  // namespace stabscope::cli
