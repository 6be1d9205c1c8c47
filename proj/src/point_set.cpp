#include "peelkit/point_set.hpp"

#include <algorithm>
#include <set>

#include "peelkit/errors.hpp"

namespace peelkit {

void PointSet::validate() const {
  if (dim < 1) throw InputError("dimension must be positive");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (static_cast<int>(points[i].size()) != dim) {
      throw InputError("point " + std::to_string(i) + " has " + std::to_string(points[i].size()) +
                       " coordinates, expected " + std::to_string(dim));
    }
  }
  std::set<Point> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!seen.insert(points[i]).second) {
      throw DegenerateError("point " + std::to_string(i) + " duplicates an earlier point", {i});
    }
  }
  if (labels && labels->size() != points.size()) throw InputError("labels length differs from point count");
  if (blocks && blocks->size() != points.size()) throw InputError("blocks length differs from point count");
}

PointSet PointSet::subset(const std::vector<std::size_t>& indices) const {
  PointSet out;
  out.dim = dim;
  for (auto i : indices) out.points.push_back(points.at(i));
  if (labels) {
    out.labels.emplace();
    for (auto i : indices) out.labels->push_back((*labels)[i]);
  }
  if (blocks) {
    out.blocks.emplace();
    for (auto i : indices) out.blocks->push_back((*blocks)[i]);
  }
  return out;
}

PointSet PointSet::with_point(const Point& p) const {
  PointSet out(dim, points);
  out.points.push_back(p);
  return out;
}

Point origin(int dim) { return Point(static_cast<std::size_t>(dim), Scalar(0)); }

}  // namespace peelkit
