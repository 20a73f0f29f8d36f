#include "diracsl2/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace diracsl2 {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
constexpr int kPaletteSize = 8;
constexpr int kMargin = 60;

// fixed two-decimal pixel coordinates keep the output byte-stable
std::string px(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  return std::string(buf, res.ptr);
}

std::string tick_label(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string render_svg(const std::vector<SvgSeries>& series, const std::string& x_label,
                       const std::string& y_label, int width, int height) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series)
    for (const auto& [x, y] : s.points) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (!(xmin <= xmax)) {  // no points at all
    xmin = ymin = 0.0;
    xmax = ymax = 1.0;
  }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;

  const double plot_w = width - 2 * kMargin;
  const double plot_h = height - 2 * kMargin;
  auto sx = [&](double x) { return kMargin + (x - xmin) / (xmax - xmin) * plot_w; };
  auto sy = [&](double y) { return height - kMargin - (y - ymin) / (ymax - ymin) * plot_h; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // frame and ticks
  out += "<rect x=\"" + px(kMargin) + "\" y=\"" + px(kMargin) + "\" width=\"" + px(plot_w) +
         "\" height=\"" + px(plot_h) + "\" fill=\"none\" stroke=\"#333333\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double fx = xmin + (xmax - xmin) * i / 5.0;
    const double fy = ymin + (ymax - ymin) * i / 5.0;
    out += "<line x1=\"" + px(sx(fx)) + "\" y1=\"" + px(height - kMargin) + "\" x2=\"" +
           px(sx(fx)) + "\" y2=\"" + px(height - kMargin + 6) + "\" stroke=\"#333333\"/>\n";
    out += "<text x=\"" + px(sx(fx)) + "\" y=\"" + px(height - kMargin + 20) +
           "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" +
           tick_label(fx) + "</text>\n";
    out += "<line x1=\"" + px(kMargin - 6) + "\" y1=\"" + px(sy(fy)) + "\" x2=\"" + px(kMargin) +
           "\" y2=\"" + px(sy(fy)) + "\" stroke=\"#333333\"/>\n";
    out += "<text x=\"" + px(kMargin - 10) + "\" y=\"" + px(sy(fy) + 4) +
           "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">" + tick_label(fy) +
           "</text>\n";
  }
  out += "<text x=\"" + px(width / 2.0) + "\" y=\"" + px(height - 15) +
         "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\">" + x_label +
         "</text>\n";
  out += "<text x=\"18\" y=\"" + px(height / 2.0) +
         "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         px(height / 2.0) + ")\">" + y_label + "</text>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = kPalette[si % kPaletteSize];
    if (s.lines && s.points.size() > 1) {
      out += "<polyline fill=\"none\" stroke=\"";
      out += color;
      out += "\" stroke-width=\"1.5\" points=\"";
      for (const auto& [x, y] : s.points) out += px(sx(x)) + "," + px(sy(y)) + " ";
      out += "\"/>\n";
    } else {
      for (const auto& [x, y] : s.points)
        out += "<circle cx=\"" + px(sx(x)) + "\" cy=\"" + px(sy(y)) + "\" r=\"1.5\" fill=\"" +
               color + "\"/>\n";
    }
  }

  // legend (first 12 labels keep it readable)
  const std::size_t legend_n = std::min<std::size_t>(series.size(), 12);
  for (std::size_t si = 0; si < legend_n; ++si) {
    const double ly = kMargin + 14.0 * (si + 1);
    out += "<rect x=\"" + px(width - kMargin - 130) + "\" y=\"" + px(ly - 8) +
           "\" width=\"10\" height=\"10\" fill=\"";
    out += kPalette[si % kPaletteSize];
    out += "\"/>\n";
    out += "<text x=\"" + px(width - kMargin - 115) + "\" y=\"" + px(ly) +
           "\" font-family=\"monospace\" font-size=\"11\">" + series[si].label + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace diracsl2
