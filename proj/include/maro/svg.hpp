#ifndef MARO_SVG_HPP
#define MARO_SVG_HPP

#include <string>
#include <vector>

#include "maro/instance.hpp"

namespace maro {

struct PlotSeries {
  std::string label;
  PointSet points;
  bool step = false;  ///< connect the points by a min-staircase
};

/// 2-D scatter/step plot on a fixed 800x800 canvas with linear axes f1/f2.
/// Throws Error if any point is not two-dimensional or not finite.
std::string render_svg(const std::vector<PlotSeries>& series, const std::string& title);

}  // namespace maro

#endif  // MARO_SVG_HPP
