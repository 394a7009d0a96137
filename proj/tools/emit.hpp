#pragma once

// CSV and SVG emitters shared by the curve and wall verbs. Every SVG element
// that carries data repeats the CSV fields verbatim as attributes, so the
// two formats can be checked against each other.

#include <string>
#include <vector>

namespace stabscope::cli {

struct PlotRow {
  double x1, y1, x2, y2;
  std::string kind;
  std::string label;
};

struct PlotWindow {
  double x0, x1;  // horizontal range: ch1/ch0
};

inline constexpr const char* kPlotHeader = "x1,y1,x2,y2,kind,label";

std::string csv_row(const PlotRow& row);
std::string emit_csv(const std::vector<PlotRow>& rows);
/// ch1/ch0 horizontal, ch2/ch0 vertical (upward), with the parabolas
/// Delta = 0, 1/2, 1 drawn as reference curves across the window.
std::string emit_svg(const std::vector<PlotRow>& rows, const PlotWindow& window);

}  // namespace stabscope::cli
