#pragma once

#include <string>

#include "peelkit/point_set.hpp"

namespace peelkit {

struct PlotOptions {
  int axis_x = 0;
  int axis_y = 1;
  int size = 640;
  bool mark_origin = true;
};

/// Static SVG of the orthogonal projection onto (axis_x, axis_y). Blocks are
/// color-coded and drawn as polylines ordered by distance from the origin.
std::string render_svg(const PointSet& p, const PlotOptions& options = {});

}  // namespace peelkit
