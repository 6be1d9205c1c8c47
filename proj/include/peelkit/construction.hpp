#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "peelkit/point_set.hpp"
#include "peelkit/scalar.hpp"

namespace peelkit {

/// Segment-like squashing: rotate so x-coordinates are distinct, then map
/// (x, y_1, ..., y_{d-1}) -> (delta x, eps y_1, ..., eps y_{d-1}).
struct FlattenParams {
  Scalar delta = 1;
  Scalar eps = 1;
  /// Half-angle parameter t of the rotation applied in each (x, y_k) plane.
  /// nullopt searches t = 0, 1/2, 1/3, ... for distinct x-coordinates.
  std::optional<Scalar> rotation;
};

/// Exact rational rotation by half-angle parameter t, applied successively
/// in the coordinate planes (0, 1), (0, 2), ..., (0, d-1).
PointSet rotate(const PointSet& p, const Scalar& t);

/// First t in 0, 1/2, 1/3, ... giving pairwise distinct x-coordinates.
Scalar choose_rotation(const PointSet& p, int max_q = 1024);

PointSet flatten(const PointSet& p, const FlattenParams& params);

/// Linear map e_1 -> target, e_k -> exact orthogonal complement basis, then
/// translation placing the block's largest-x point on target.
PointSet place_block(const PointSet& block, const Point& target);

struct BlockTree {
  int block_id = 0;
  std::optional<Point> placement;
  std::vector<std::size_t> child_sizes;
  std::vector<BlockTree> children;
  /// Indices into the final point set, for blocks with no children.
  std::vector<std::size_t> leaf_points;

  std::size_t point_count() const;
};

struct Construction {
  int d = 0;
  int m = 0;
  std::size_t n = 0;
  Scalar delta;
  Scalar eps;
  /// Schedule exponent: delta = 2^-k, eps = delta * 2^-k.
  unsigned k = 0;
  PointSet points;
  BlockTree tree;
};

/// Part sizes floor(n/D) / ceil(n/D), larger parts first.
std::vector<std::size_t> partition_sizes(std::size_t n, std::size_t parts);

/// Recursive construction with explicit flattening scales. The top-level
/// blocks are recorded in points.blocks.
Construction build_sn(int d, int m, std::size_t n, const Scalar& delta, const Scalar& eps);

/// build_sn with delta = 2^-k, eps = 2^-2k.
Construction build_sn(int d, int m, std::size_t n, unsigned k);

struct ConstructionCertificate {
  bool general_position = false;
  bool outermost_only = false;
  bool block_activity = false;
  bool lemma_bound = false;
  /// nullopt when the growth formula does not apply (d < 3 or n < 2).
  std::optional<bool> theorem2_bound;

  BigCount count;
  BigCount lemma_bound_value;
  std::optional<Scalar> theorem2_upper;
  int max_active_blocks = 0;
  int allowed_active_blocks = 0;
  std::uint64_t states_checked = 0;
  std::string failure;

  bool passed() const {
    return general_position && outermost_only && block_activity && lemma_bound && theorem2_bound.value_or(true);
  }
};

/// Exhaustive audit of a construction over all reachable peeling states.
/// Requires s.blocks. Rejects sets larger than `audit_limit`.
ConstructionCertificate certify_construction(const PointSet& s, int d, int m, std::size_t audit_limit = 14);

struct CertifiedConstruction {
  Construction construction;
  ConstructionCertificate certificate;
  /// Largest n at which the chosen k was exhaustively certified.
  std::size_t certified_up_to = 0;
};

/// Raises k from `k_start` until certify_construction passes at
/// min(n, audit_limit); a larger n reuses that k uncertified.
CertifiedConstruction build_certified(int d, int m, std::size_t n, std::size_t audit_limit = 14,
                                      unsigned k_start = 2, unsigned k_max = 24);

}  // namespace peelkit
