#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "citetrack/errors.hpp"

namespace citetrack {

struct svg_series {
  std::string name;
  std::vector<double> y;
  bool dashed = false;
};

namespace detail {

inline std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string tick_label(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace detail

// Static line chart: axes, ticks, one polyline per series, legend. Output is
// a pure function of the inputs, so regenerated charts are byte-identical.
inline std::string line_chart(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<double>& x,
                              const std::vector<svg_series>& series) {
  if (x.empty()) throw validation_error("line_chart: x values required");
  for (const svg_series& s : series)
    if (s.y.size() != x.size())
      throw validation_error("line_chart: series '" + s.name +
                             "' length does not match x");

  const double width = 720.0, height = 480.0;
  const double ml = 78.0, mr = 24.0, mt = 46.0, mb = 58.0;
  const double pw = width - ml - mr, ph = height - mt - mb;

  double x_min = x[0], x_max = x[0];
  for (double v : x) {
    x_min = std::min(x_min, v);
    x_max = std::max(x_max, v);
  }
  double y_min = series.empty() ? 0.0 : series[0].y[0];
  double y_max = y_min;
  for (const svg_series& s : series)
    for (double v : s.y) {
      y_min = std::min(y_min, v);
      y_max = std::max(y_max, v);
    }
  if (x_max == x_min) {
    x_min -= 1.0;
    x_max += 1.0;
  }
  const double y_pad = (y_max == y_min) ? 1.0 : 0.05 * (y_max - y_min);
  y_min -= y_pad;
  y_max += y_pad;

  auto px = [&](double v) { return ml + (v - x_min) / (x_max - x_min) * pw; };
  auto py = [&](double v) {
    return mt + ph - (v - y_min) / (y_max - y_min) * ph;
  };

  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                  "#9467bd", "#ff7f0e", "#8c564b"};
  constexpr int palette_size = 6;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" "
         "height=\"480\" viewBox=\"0 0 720 480\">\n";
  svg += "<rect width=\"720\" height=\"480\" fill=\"white\"/>\n";
  svg += "<text x=\"360\" y=\"26\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">" +
         title + "</text>\n";

  // gridlines and ticks
  for (int k = 0; k <= 4; ++k) {
    const double fx = x_min + (x_max - x_min) * k / 4.0;
    const double fy = y_min + (y_max - y_min) * k / 4.0;
    const std::string gx = detail::fixed2(px(fx));
    const std::string gy = detail::fixed2(py(fy));
    svg += "<line x1=\"" + gx + "\" y1=\"" + detail::fixed2(mt) + "\" x2=\"" +
           gx + "\" y2=\"" + detail::fixed2(mt + ph) +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + detail::fixed2(ml) + "\" y1=\"" + gy + "\" x2=\"" +
           detail::fixed2(ml + pw) + "\" y2=\"" + gy +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + gx + "\" y=\"" + detail::fixed2(mt + ph + 18.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">" +
           detail::tick_label(fx) + "</text>\n";
    svg += "<text x=\"" + detail::fixed2(ml - 8.0) + "\" y=\"" +
           detail::fixed2(py(fy) + 4.0) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">" +
           detail::tick_label(fy) + "</text>\n";
  }

  // axes
  svg += "<line x1=\"" + detail::fixed2(ml) + "\" y1=\"" +
         detail::fixed2(mt + ph) + "\" x2=\"" + detail::fixed2(ml + pw) +
         "\" y2=\"" + detail::fixed2(mt + ph) +
         "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  svg += "<line x1=\"" + detail::fixed2(ml) + "\" y1=\"" + detail::fixed2(mt) +
         "\" x2=\"" + detail::fixed2(ml) + "\" y2=\"" +
         detail::fixed2(mt + ph) +
         "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  svg += "<text x=\"" + detail::fixed2(ml + pw / 2.0) + "\" y=\"" +
         detail::fixed2(height - 14.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">" +
         x_label + "</text>\n";
  svg += "<text x=\"20\" y=\"" + detail::fixed2(mt + ph / 2.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 20 " +
         detail::fixed2(mt + ph / 2.0) + ")\">" + y_label + "</text>\n";

  // series polylines
  for (std::size_t si = 0; si < series.size(); ++si) {
    const svg_series& s = series[si];
    std::string points;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i > 0) points += ' ';
      points += detail::fixed2(px(x[i])) + "," + detail::fixed2(py(s.y[i]));
    }
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += palette[si % palette_size];
    svg += "\" stroke-width=\"2\"";
    if (s.dashed) svg += " stroke-dasharray=\"7 5\"";
    svg += " points=\"" + points + "\"/>\n";
  }

  // legend
  for (std::size_t si = 0; si < series.size(); ++si) {
    const double ly = mt + 14.0 + 18.0 * static_cast<double>(si);
    svg += "<line x1=\"" + detail::fixed2(ml + 12.0) + "\" y1=\"" +
           detail::fixed2(ly) + "\" x2=\"" + detail::fixed2(ml + 40.0) +
           "\" y2=\"" + detail::fixed2(ly) + "\" stroke=\"";
    svg += palette[si % palette_size];
    svg += "\" stroke-width=\"2\"";
    if (series[si].dashed) svg += " stroke-dasharray=\"7 5\"";
    svg += "/>\n";
    svg += "<text x=\"" + detail::fixed2(ml + 46.0) + "\" y=\"" +
           detail::fixed2(ly + 4.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + series[si].name +
           "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace citetrack
