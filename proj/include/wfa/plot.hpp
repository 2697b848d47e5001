#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wfa/wfa.hpp"

namespace wfa {

enum class PlotFormat { Csv, Svg };

/// Header "x,value", one row per sample. Decimal values use 12 digits after
/// the point; `exact` switches to "p/q". Undefined values are empty cells.
std::string render_csv(const std::vector<Sample>& samples, bool exact);

/// Pixel frame of the 800 x 600 plot: x in [0, 1] and values in [lo, hi].
struct PlotFrame {
  static constexpr double width = 800;
  static constexpr double height = 600;
  static constexpr double margin = 40;
  double lo;
  double hi;

  double px(double x) const;
  double py(double value) const;
};

/// Frame covering the defined values, widened to a unit range when flat.
PlotFrame frame_for(const std::vector<Sample>& samples);

/// One polyline through the defined samples, in x order.
std::string render_svg(const std::vector<Sample>& samples);

/// Writes the rendering to `path`. Throws Error when the path is unwritable.
void emit_plot(const std::vector<Sample>& samples, const std::string& path, PlotFormat format,
               bool exact = false);

}  // namespace wfa
