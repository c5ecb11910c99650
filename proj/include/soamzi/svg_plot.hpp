#pragma once

#include <string>
#include <vector>

namespace soamzi {

/// Minimal self-contained SVG line plot: axes with ticks, one polyline per
/// series, legend from series names. No external dependencies.
struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
  int width = 640;
  int height = 420;
};

std::string render_svg(const PlotSpec& spec);
void write_svg(const PlotSpec& spec, const std::string& path);

}  // namespace soamzi
