#pragma once

#include <string>
#include <utility>
#include <vector>

namespace diracsl2 {

struct SvgSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
  bool lines = true;  // polyline when true, dots otherwise
};

// Tiny deterministic plot renderer: axes, ticks, a fixed palette, one
// polyline or dot cloud per series, legend in the top-right corner.  Output
// depends only on the inputs, never on locale or environment.
std::string render_svg(const std::vector<SvgSeries>& series, const std::string& x_label,
                       const std::string& y_label, int width = 900, int height = 600);

}  // namespace diracsl2
