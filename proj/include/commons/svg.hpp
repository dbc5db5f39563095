#ifndef COMMONS_SVG_HPP
#define COMMONS_SVG_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace commons {

/// One labelled line; y[k] is the value at generation k+1.
struct Series {
  std::string label;
  std::vector<double> y;
};

/// Renders a self-contained SVG line chart: one polyline per series, one
/// dashed horizontal line at `availability`, axes labelled "generation" and
/// "cumulative resource consumed".
void emit_svg_plot(const std::vector<Series>& series, double availability,
                   const std::filesystem::path& path);

}  // namespace commons

#endif  // COMMONS_SVG_HPP
