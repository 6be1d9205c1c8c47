#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "peelkit/point_set.hpp"
#include "peelkit/scalar.hpp"

namespace peelkit {

/// Open-halfspace depth of p with respect to S: the fewest points of S in an
/// open halfspace bounded by a hyperplane through p.
struct DepthReport {
  int depth = 0;
  /// Direction a with exactly `depth` points s satisfying a.(s - p) > 0.
  Point witness;
};

/// Number of s in S with a.(s - p) > 0.
int open_count(const PointSet& s, const Point& p, const Point& direction);

/// Requires S + {p} in general position (DegenerateError otherwise).
DepthReport open_halfspace_depth(const PointSet& s, const Point& p);

/// Subset-LP oracle for the same quantity; independent of the candidate
/// normal enumeration. Rejects inputs larger than `limit`.
int depth_oracle(const PointSet& s, const Point& p, std::size_t limit = 12);

/// d + 2m - 1 points on the alternating moment curve, certified to have
/// open-halfspace depth exactly m around the origin. Throws
/// CertificationError if no perturbation within budget certifies.
PointSet gale_set(int d, int m);

/// The m-step defending set whose hull never holds more than d + m points.
struct BaseSet {
  PointSet points;
  int m = 0;
  /// Radii used for the m - 1 shrunken points, in order.
  std::vector<Scalar> scaling_radii;
};

BaseSet base_set(int d, int m);

/// Largest r = 2^-k (k <= 64) for which the cross-polytope with vertices
/// +-d*r*e_i lies in conv of every `subset_size`-subset of `pts`, halved once.
Scalar certified_inner_radius(const PointSet& pts, std::size_t subset_size);

struct ThresholdReport {
  int d = 0;
  int m = 0;
  std::uint64_t trials = 0;
  int max_depth = -1;
  /// A sampled set attaining max_depth.
  PointSet worst;
  std::vector<std::uint64_t> depth_histogram;
};

/// Samples `trials` general-position sets of size d + 2m - 2 and records the
/// largest depth of the origin seen.
ThresholdReport below_threshold_search(int d, int m, std::uint64_t trials, std::uint64_t seed);

/// Seeded random rational set of n points in R^d, in general position
/// together with the origin. Streams are independent per (seed, stream).
PointSet sample_general_position(int d, std::size_t n, std::uint64_t seed, std::uint64_t stream);

}  // namespace peelkit
