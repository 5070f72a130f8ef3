// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace entbounds {

/// One polyline of a chart. NaN samples break the line.
struct ChartSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
  bool dashed = false;
  double width = 1.6;
};

/// Renders a self-contained SVG line chart: axes with tick labels, a legend,
/// and one path per series.
std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<ChartSeries>& series);

}  // namespace entbounds
