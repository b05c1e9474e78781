#include "alab/svg.hpp"

#include <algorithm>
#include <cmath>

#include "alab/csvio.hpp"
#include "alab/errors.hpp"

namespace alab {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 560.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 160.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 55.0;

const char* kPalette[] = {"#1b6ca8", "#c0392b", "#1e8449", "#8e44ad",
                          "#d68910", "#566573"};

struct Range {
  double lo = 0.0, hi = 1.0;
  void include(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
};

// Round tick spacing to 1/2/5 times a power of ten.
double nice_step(double span, int target_ticks) {
  const double raw = span / target_ticks;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  double step = 10.0;
  if (norm <= 1.0)
    step = 1.0;
  else if (norm <= 2.0)
    step = 2.0;
  else if (norm <= 5.0)
    step = 5.0;
  return step * mag;
}

std::string num(double v) { return format_double(v); }

}  // namespace

std::string render_line_plot(const std::string& title, const std::string& x_label,
                             const std::string& y_label,
                             const std::vector<SvgSeries>& series) {
  bool any = false;
  Range xr, yr;
  for (const auto& s : series)
    for (const auto& [x, y] : s.points) {
      if (!any) {
        xr = {x, x};
        yr = {y, y};
        any = true;
      } else {
        xr.include(x);
        yr.include(y);
      }
    }
  if (!any) throw Error("render_line_plot: nothing to plot");
  if (xr.hi == xr.lo) xr.hi = xr.lo + 1.0;
  if (yr.hi == yr.lo) yr.hi = yr.lo + 1.0;
  const double pad_x = 0.05 * (xr.hi - xr.lo);
  const double pad_y = 0.08 * (yr.hi - yr.lo);
  xr.lo -= pad_x;
  xr.hi += pad_x;
  yr.lo -= pad_y;
  yr.hi += pad_y;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto sx = [&](double v) {
    return kMarginLeft + (v - xr.lo) / (xr.hi - xr.lo) * plot_w;
  };
  const auto sy = [&](double v) {
    return kMarginTop + plot_h - (v - yr.lo) / (yr.hi - yr.lo) * plot_h;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num(kWidth / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" +
         title + "</text>\n";

  // Axes box.
  svg += "<rect x=\"" + num(kMarginLeft) + "\" y=\"" + num(kMarginTop) + "\" width=\"" +
         num(plot_w) + "\" height=\"" + num(plot_h) +
         "\" fill=\"none\" stroke=\"#333333\"/>\n";

  const double x_step = nice_step(xr.hi - xr.lo, 6);
  for (double v = std::ceil(xr.lo / x_step) * x_step; v <= xr.hi + 1e-12; v += x_step) {
    const double px = sx(v);
    svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(kMarginTop + plot_h) + "\" x2=\"" +
           num(px) + "\" y2=\"" + num(kMarginTop + plot_h + 5) + "\" stroke=\"#333333\"/>\n";
    svg += "<text x=\"" + num(px) + "\" y=\"" + num(kMarginTop + plot_h + 20) +
           "\" text-anchor=\"middle\">" + num(v) + "</text>\n";
  }
  const double y_step = nice_step(yr.hi - yr.lo, 6);
  for (double v = std::ceil(yr.lo / y_step) * y_step; v <= yr.hi + 1e-12; v += y_step) {
    const double py = sy(v);
    svg += "<line x1=\"" + num(kMarginLeft - 5) + "\" y1=\"" + num(py) + "\" x2=\"" +
           num(kMarginLeft) + "\" y2=\"" + num(py) + "\" stroke=\"#333333\"/>\n";
    svg += "<text x=\"" + num(kMarginLeft - 9) + "\" y=\"" + num(py + 4) +
           "\" text-anchor=\"end\">" + num(v) + "</text>\n";
  }
  svg += "<text x=\"" + num(kMarginLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 12) +
         "\" text-anchor=\"middle\">" + x_label + "</text>\n";
  svg += "<text x=\"18\" y=\"" + num(kMarginTop + plot_h / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         num(kMarginTop + plot_h / 2) + ")\">" + y_label + "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
    std::string pts;
    for (const auto& [x, y] : series[s].points) {
      if (!pts.empty()) pts += ' ';
      pts += num(sx(x)) + ',' + num(sy(y));
    }
    svg += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"2\"/>\n";
    for (const auto& [x, y] : series[s].points)
      svg += "<circle cx=\"" + num(sx(x)) + "\" cy=\"" + num(sy(y)) + "\" r=\"3\" fill=\"" +
             color + "\"/>\n";
    const double ly = kMarginTop + 16.0 + 20.0 * static_cast<double>(s);
    svg += "<line x1=\"" + num(kWidth - kMarginRight + 12) + "\" y1=\"" + num(ly) +
           "\" x2=\"" + num(kWidth - kMarginRight + 40) + "\" y2=\"" + num(ly) +
           "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + num(kWidth - kMarginRight + 46) + "\" y=\"" + num(ly + 4) + "\">" +
           series[s].label + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace alab
