#pragma once

#include <string>
#include <vector>

namespace casnuc {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string stroke;       // empty: palette colour by index
  bool dashed = false;
};

struct PlotAxes {
  std::string title;
  std::string x_label;
  std::string y_label;
};

// Self-contained single-panel SVG line chart: one polyline per series,
// linear axes with tick labels, and a legend. Identical input gives
// byte-identical output.
//
// Throws DomainError for an empty series list, a series with fewer than two
// points or mismatched x/y lengths, and NumericalError for NaN/Inf values.
std::string render_svg(const std::vector<PlotSeries>& series, const PlotAxes& axes);

// "Nice" tick positions (1, 2, 5 x 10^k steps) covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi, int target_count = 6);

}  // namespace casnuc
