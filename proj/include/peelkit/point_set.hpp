#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "peelkit/scalar.hpp"

namespace peelkit {

/// An ordered list of points in R^dim with optional labels and block ids.
struct PointSet {
  int dim = 0;
  std::vector<Point> points;
  std::optional<std::vector<std::string>> labels;
  std::optional<std::vector<int>> blocks;

  PointSet() = default;
  PointSet(int d, std::vector<Point> pts) : dim(d), points(std::move(pts)) {}

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  const Point& operator[](std::size_t i) const { return points[i]; }

  /// Checks dimension consistency, pairwise distinctness and block/label
  /// lengths. Throws InputError on the first violation.
  void validate() const;

  /// The points selected by `indices`, carrying labels/blocks along.
  PointSet subset(const std::vector<std::size_t>& indices) const;

  /// Copy with `p` appended (labels/blocks dropped).
  PointSet with_point(const Point& p) const;

  bool operator==(const PointSet& other) const = default;
};

Point origin(int dim);

}  // namespace peelkit
