#pragma once

#include <string>
#include <vector>

namespace chiralhop {

// Minimal static vector plot: one polyline per labelled series over a shared
// x grid, with axes and a legend. Returns the SVG document.
struct PlotSeries {
  std::string label;
  std::string color;
  std::vector<double> y;
};

std::string line_plot_svg(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<double>& x,
                          const std::vector<PlotSeries>& series);

}  // namespace chiralhop
