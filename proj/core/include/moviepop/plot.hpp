#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "moviepop/correlation.hpp"

namespace moviepop {

struct AxisTicks {
  double start = 0;
  double step = 1;
  std::vector<double> values;  // start, start + step, ... covering the range
};

/// Round tick positions (1, 2, 5 times a power of ten) covering [lo, hi]
/// with roughly `target` intervals.
AxisTicks nice_ticks(double lo, double hi, int target = 5);

/// 800x600 static SVG: x is the series' x (budget), y the other attribute,
/// one <circle> per pair and a single <line> for the trend across the
/// x-range. Axes and tick marks are drawn as <path> elements.
std::string render_scatter_svg(const PairedSeries& series, const TrendLine& trend);

/// CSV of the plotted pairs with a header naming both attributes.
std::string render_points_csv(const PairedSeries& series);

/// Writes the SVG to `svg_path` and the point CSV next to it (same stem,
/// `.csv`). Throws IoError on write failure.
void scatter_plot(const PairedSeries& series, const TrendLine& trend,
                  const std::filesystem::path& svg_path);

}  // namespace moviepop
