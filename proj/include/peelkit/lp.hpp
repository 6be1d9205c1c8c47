#pragma once

#include <optional>
#include <vector>

#include "peelkit/scalar.hpp"

namespace peelkit::lp {

using Matrix = std::vector<std::vector<Scalar>>;

/// Outcome of the phase-one problem {x >= 0 : A x = b}.
struct EqualityResult {
  bool feasible = false;
  /// A feasible x (one entry per column of A) when feasible.
  std::vector<Scalar> x;
  /// Farkas vector y with y^T A <= 0 columnwise and y^T b > 0 when infeasible.
  std::vector<Scalar> farkas;
};

/// Phase-one simplex over exact rationals, Bland's rule for anticycling.
EqualityResult solve_nonnegative(const Matrix& a, const std::vector<Scalar>& b);

/// Finds some free x with A x <= b, or nullopt when the system is empty.
std::optional<std::vector<Scalar>> solve_inequalities(const Matrix& a, const std::vector<Scalar>& b);

}  // namespace peelkit::lp
