#pragma once

#include <string>
#include <vector>

namespace alab {

struct SvgSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, y), already in data units
};

// Minimal hand-rolled line plot: linear axes with ticks, one polyline per
// series from a fixed palette, and a legend. Output is byte-deterministic
// for fixed input. Plots are diagnostics; CSV stays the contract.
std::string render_line_plot(const std::string& title, const std::string& x_label,
                             const std::string& y_label,
                             const std::vector<SvgSeries>& series);

}  // namespace alab
