#include "commons/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace commons {

namespace {

constexpr int kWidth = 960;
constexpr int kHeight = 560;
constexpr int kMarginLeft = 90;
constexpr int kMarginRight = 190;  // room for the legend
constexpr int kMarginTop = 30;
constexpr int kMarginBottom = 60;

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                          "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#ad494a"};

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void emit_svg_plot(const std::vector<Series>& series, double availability,
                   const std::filesystem::path& path) {
  if (series.empty()) throw std::invalid_argument("emit_svg_plot: no series to draw");

  std::size_t max_len = 0;
  double max_y = availability;
  for (const auto& s : series) {
    max_len = std::max(max_len, s.y.size());
    for (double v : s.y) max_y = std::max(max_y, v);
  }
  if (max_len == 0) throw std::invalid_argument("emit_svg_plot: series are empty");
  if (max_y <= 0.0) max_y = 1.0;
  max_y *= 1.05;

  const double x0 = kMarginLeft;
  const double y0 = kHeight - kMarginBottom;
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto x_of = [&](double gen) { return x0 + plot_w * gen / static_cast<double>(max_len); };
  const auto y_of = [&](double v) { return y0 - plot_h * v / max_y; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

  // Axes and tick marks as a single path so the dashed threshold stays the
  // only <line> element in the document.
  svg << "<path d=\"M " << x0 << ' ' << kMarginTop << " L " << x0 << ' ' << y0 << " L "
      << x0 + plot_w << ' ' << y0;
  const int ticks = 5;
  for (int t = 0; t <= ticks; ++t) {
    const double gx = x_of(max_len * t / static_cast<double>(ticks));
    svg << " M " << gx << ' ' << y0 << " L " << gx << ' ' << y0 + 6;
    const double gy = y_of(max_y * t / static_cast<double>(ticks));
    svg << " M " << x0 << ' ' << gy << " L " << x0 - 6 << ' ' << gy;
  }
  svg << "\" stroke=\"black\" fill=\"none\" stroke-width=\"1\"/>\n";

  for (int t = 0; t <= ticks; ++t) {
    const double gen = max_len * t / static_cast<double>(ticks);
    svg << "<text x=\"" << x_of(gen) << "\" y=\"" << y0 + 22
        << "\" font-size=\"12\" text-anchor=\"middle\">" << short_number(gen) << "</text>\n";
    const double val = max_y * t / static_cast<double>(ticks);
    svg << "<text x=\"" << x0 - 10 << "\" y=\"" << y_of(val) + 4
        << "\" font-size=\"12\" text-anchor=\"end\">" << short_number(val) << "</text>\n";
  }
  svg << "<text x=\"" << x0 + plot_w / 2 << "\" y=\"" << kHeight - 16
      << "\" font-size=\"14\" text-anchor=\"middle\">generation</text>\n";
  svg << "<text x=\"18\" y=\"" << kMarginTop + plot_h / 2
      << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << kMarginTop + plot_h / 2 << ")\">cumulative resource consumed</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % (sizeof kPalette / sizeof kPalette[0])];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < series[s].y.size(); ++k) {
      if (k) svg << ' ';
      svg << x_of(static_cast<double>(k + 1)) << ',' << y_of(series[s].y[k]);
    }
    svg << "\"/>\n";
    const double ly = kMarginTop + 16.0 * (static_cast<double>(s) + 1);
    svg << "<rect x=\"" << x0 + plot_w + 14 << "\" y=\"" << ly - 9
        << "\" width=\"12\" height=\"4\" fill=\"" << color << "\"/>\n";
    svg << "<text x=\"" << x0 + plot_w + 30 << "\" y=\"" << ly << "\" font-size=\"12\">"
        << escape(series[s].label) << "</text>\n";
  }

  const double ty = y_of(availability);
  svg << "<line x1=\"" << x0 << "\" y1=\"" << ty << "\" x2=\"" << x0 + plot_w << "\" y2=\"" << ty
      << "\" stroke=\"black\" stroke-width=\"1.5\" stroke-dasharray=\"7 5\"/>\n";
  svg << "<text x=\"" << x0 + plot_w - 4 << "\" y=\"" << ty - 6
      << "\" font-size=\"12\" text-anchor=\"end\">availability</text>\n";
  svg << "</svg>\n";

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << svg.str();
}

}  // namespace commons
