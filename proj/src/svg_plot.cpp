#include "soamzi/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace soamzi {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b"};

struct Range {
  double lo = 0.0, hi = 1.0;
};

Range data_range(const std::vector<PlotSeries>& series, bool y_axis) {
  bool any = false;
  Range r{0.0, 1.0};
  for (const auto& s : series) {
    const auto& v = y_axis ? s.y : s.x;
    for (double x : v) {
      if (!std::isfinite(x)) continue;
      if (!any) {
        r.lo = r.hi = x;
        any = true;
      } else {
        r.lo = std::min(r.lo, x);
        r.hi = std::max(r.hi, x);
      }
    }
  }
  if (!any) return {0.0, 1.0};
  if (r.hi == r.lo) {
    r.lo -= 1.0;
    r.hi += 1.0;
  }
  const double pad = 0.05 * (r.hi - r.lo);
  return {r.lo - pad, r.hi + pad};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  const int w = spec.width, h = spec.height;
  const int ml = 64, mr = 16, mt = 32, mb = 48;  // margins
  const int pw = w - ml - mr, ph = h - mt - mb;

  const Range xr = data_range(spec.series, false);
  const Range yr = data_range(spec.series, true);
  const auto px = [&](double x) { return ml + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  const auto py = [&](double y) { return mt + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
      << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << w / 2 << "\" y=\"20\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"14\">" << spec.title << "</text>\n";

  // axes box
  out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw
      << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";

  // ticks and grid
  const int n_ticks = 5;
  for (int i = 0; i <= n_ticks; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / n_ticks;
    const double fy = yr.lo + (yr.hi - yr.lo) * i / n_ticks;
    const double gx = px(fx), gy = py(fy);
    out << "<line x1=\"" << gx << "\" y1=\"" << mt + ph << "\" x2=\"" << gx
        << "\" y2=\"" << mt + ph + 5 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << gx << "\" y=\"" << mt + ph + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
        << fmt(fx) << "</text>\n";
    out << "<line x1=\"" << ml - 5 << "\" y1=\"" << gy << "\" x2=\"" << ml
        << "\" y2=\"" << gy << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << ml - 8 << "\" y=\"" << gy + 3
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
        << fmt(fy) << "</text>\n";
  }

  // axis labels
  out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << h - 10
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
      << spec.x_label << "</text>\n";
  out << "<text x=\"14\" y=\"" << mt + ph / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
      << "transform=\"rotate(-90 14 " << mt + ph / 2 << ")\">" << spec.y_label
      << "</text>\n";

  // series polylines + legend
  for (std::size_t si = 0; si < spec.series.size(); ++si) {
    const auto& s = spec.series[si];
    const char* color = kPalette[si % (sizeof(kPalette) / sizeof(kPalette[0]))];
    if (s.x.size() != s.y.size())
      throw std::invalid_argument("plot series " + s.name + " has mismatched x/y");
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" "
        << "points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      out << px(s.x[i]) << "," << py(s.y[i]) << " ";
    }
    out << "\"/>\n";
    const int ly = mt + 14 + static_cast<int>(si) * 14;
    out << "<line x1=\"" << ml + 8 << "\" y1=\"" << ly - 4 << "\" x2=\"" << ml + 28
        << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color
        << "\" stroke-width=\"1.5\"/>\n";
    out << "<text x=\"" << ml + 32 << "\" y=\"" << ly
        << "\" font-family=\"sans-serif\" font-size=\"10\">" << s.name << "</text>\n";
  }

  out << "</svg>\n";
  return out.str();
}

void write_svg(const PlotSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << render_svg(spec);
}

}  // namespace soamzi
