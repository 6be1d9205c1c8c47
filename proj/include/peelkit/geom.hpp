#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "peelkit/point_set.hpp"
#include "peelkit/scalar.hpp"

namespace peelkit {

/// Sign of det(M) for a square rational matrix, by fraction-free (Bareiss)
/// elimination after clearing row denominators.
int determinant_sign(const std::vector<std::vector<Scalar>>& m);

/// Rank of a rational matrix (rows may outnumber columns or vice versa).
int matrix_rank(const std::vector<std::vector<Scalar>>& m);

/// Sign of det[p_1 - p_0, ..., p_d - p_0]. Throws InputError on size mismatch.
int orientation(const std::vector<Point>& simplex, int dim);

/// First (d+1)-subset found lying on a common hyperplane, or the whole set
/// when fewer than d+1 points are affinely dependent. nullopt if none.
std::optional<std::vector<std::size_t>> find_degeneracy(const PointSet& p);

bool is_general_position(const PointSet& p);

/// Throws DegenerateError naming the offending subset.
void require_general_position(const PointSet& p);

/// Exact witness for q in conv(P) or q outside conv(P).
struct MembershipCertificate {
  enum class Kind { kWeights, kSeparator };
  Kind kind = Kind::kSeparator;
  /// One convex weight per point of P (kWeights).
  std::vector<Scalar> weights;
  /// normal . q > offset >= normal . s for every s in P (kSeparator).
  Point normal;
  Scalar offset;

  bool is_member() const { return kind == Kind::kWeights; }
};

MembershipCertificate convex_membership(const Point& q, const PointSet& p);

/// Re-checks a certificate with exact arithmetic.
bool verify_certificate(const MembershipCertificate& cert, const Point& q, const PointSet& p);

/// Indices i with P[i] not in conv(P \ {P[i]}), ascending. LP based; works
/// for degenerate input too.
std::vector<std::size_t> hull_vertices(const PointSet& p);

}  // namespace peelkit

namespace peelkit {

/// Some nonzero vector orthogonal to every row; rows must have rank < dim.
Point null_vector(const std::vector<Point>& rows, int dim);

}  // namespace peelkit
