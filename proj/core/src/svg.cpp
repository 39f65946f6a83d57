#include "chiralhop/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace chiralhop {

namespace {
constexpr double kW = 640, kH = 420;
constexpr double kL = 70, kR = 20, kT = 40, kB = 50;

std::string fmt(double v) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << v;
  return o.str();
}
}  // namespace

std::string line_plot_svg(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<double>& x,
                          const std::vector<PlotSeries>& series) {
  if (x.size() < 2) throw std::invalid_argument("line_plot_svg: need at least two points");
  double xmin = x.front(), xmax = x.back();
  double ymin = 0.0, ymax = 0.0;
  for (const auto& s : series)
    for (double v : s.y) {
      if (std::isnan(v)) continue;
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  if (ymax == ymin) ymax = ymin + 1.0;
  if (xmax == xmin) xmax = xmin + 1.0;
  const double plot_w = kW - kL - kR, plot_h = kH - kT - kB;
  auto sx = [&](double v) { return kL + (v - xmin) / (xmax - xmin) * plot_w; };
  auto sy = [&](double v) { return kT + (ymax - v) / (ymax - ymin) * plot_h; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
      << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kW / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
      << title << "</text>\n";
  // frame and ticks
  out << "<rect x=\"" << kL << "\" y=\"" << kT << "\" width=\"" << plot_w << "\" height=\""
      << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 5; ++k) {
    const double xv = xmin + (xmax - xmin) * k / 5.0;
    const double yv = ymin + (ymax - ymin) * k / 5.0;
    out << "<line x1=\"" << sx(xv) << "\" y1=\"" << kT + plot_h << "\" x2=\"" << sx(xv)
        << "\" y2=\"" << kT + plot_h + 5 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << sx(xv) << "\" y=\"" << kT + plot_h + 18
        << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt(xv) << "</text>\n";
    out << "<line x1=\"" << kL - 5 << "\" y1=\"" << sy(yv) << "\" x2=\"" << kL << "\" y2=\""
        << sy(yv) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << kL - 8 << "\" y=\"" << sy(yv) + 4
        << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(yv) << "</text>\n";
  }
  out << "<text x=\"" << kL + plot_w / 2 << "\" y=\"" << kH - 12
      << "\" text-anchor=\"middle\" font-size=\"13\">" << x_label << "</text>\n";
  out << "<text x=\"16\" y=\"" << kT + plot_h / 2
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
      << kT + plot_h / 2 << ")\">" << y_label << "</text>\n";

  double legend_y = kT + 14;
  for (const auto& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < x.size() && i < s.y.size(); ++i) {
      if (std::isnan(s.y[i])) continue;
      out << fmt(sx(x[i])) << "," << fmt(sy(s.y[i])) << " ";
    }
    out << "\"/>\n";
    out << "<line x1=\"" << kL + plot_w - 120 << "\" y1=\"" << legend_y << "\" x2=\""
        << kL + plot_w - 95 << "\" y2=\"" << legend_y << "\" stroke=\"" << s.color
        << "\" stroke-width=\"1.5\"/>\n";
    out << "<text x=\"" << kL + plot_w - 90 << "\" y=\"" << legend_y + 4
        << "\" font-size=\"12\">" << s.label << "</text>\n";
    legend_y += 16;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace chiralhop
