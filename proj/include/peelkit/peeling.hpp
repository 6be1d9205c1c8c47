#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "peelkit/point_set.hpp"
#include "peelkit/scalar.hpp"

namespace peelkit {

/// Bitmask of the points still present, over the input ordering.
using PeelState = std::uint64_t;

struct PeelOptions {
  /// Memo-table cap for peel_count; past it a ResourceError is thrown.
  std::uint64_t state_budget = std::uint64_t{1} << 26;
  /// Largest input accepted by peel_count_naive.
  std::size_t naive_limit = 9;
  /// Largest input accepted by simplified_census.
  std::size_t census_limit = 14;
  /// When nonzero, peel_count also records this many sequences.
  std::size_t enumerate = 0;
};

/// Answers "which points of this subset are hull vertices?" for a fixed
/// general-position set. A point is interior to a subset exactly when some
/// (d+1)-simplex of that subset strictly contains it, so every containing
/// simplex is precomputed once from orientation signs.
class HullIndex {
 public:
  /// Throws DegenerateError when P is not in general position and
  /// InputError when P has more than 64 points.
  explicit HullIndex(const PointSet& p);

  std::size_t size() const { return n_; }
  int dim() const { return dim_; }
  PeelState full() const { return n_ == 64 ? ~PeelState{0} : (PeelState{1} << n_) - 1; }

  /// Hull vertices of the subset `state`.
  PeelState hull(PeelState state) const;

  /// Number of (d+1)-simplices containing point i.
  std::size_t containing_simplices(std::size_t i) const { return containers_[i].size(); }

 private:
  std::size_t n_;
  int dim_;
  std::vector<std::vector<PeelState>> containers_;
};

/// Visits every state reachable from the full set by repeatedly removing a
/// hull vertex (including the full and empty states), each exactly once.
/// fn(state, hull_of_state) returns false to stop the walk.
void for_each_reachable_state(const HullIndex& index,
                              const std::function<bool(PeelState, PeelState)>& fn);

struct PeelReport {
  BigCount count;
  std::vector<std::vector<std::size_t>> enumerated;
  std::uint64_t visited_states = 0;
};

/// g_d(P) by memoized recursion over remaining subsets.
PeelReport peel_count(const PointSet& p, const PeelOptions& options = {});

/// g_d(P) by plain depth-first enumeration, LP hull tests at every node.
BigCount peel_count_naive(const PointSet& p, const PeelOptions& options = {});

/// The lexicographically first `limit` peeling sequences.
std::vector<std::vector<std::size_t>> peel_enumerate(const PointSet& p, std::size_t limit);

/// True iff `seq` is a permutation of P's indices in which every removed point
/// is a hull vertex of what remains (LP checked).
bool is_peeling_sequence(const PointSet& p, const std::vector<std::size_t>& seq);

/// True iff no peeling sequence of S + {p} removes p within its first m steps.
bool defends_by_peeling(const PointSet& s, const Point& p, int m);

struct SimplifiedReport {
  BigCount distinct_sequences;
  int max_active_blocks = 0;
  std::uint64_t symbol_states = 0;
};

/// Distinct block-symbol strings over all peeling sequences, and the largest
/// number of blocks simultaneously owning a hull vertex.
SimplifiedReport simplified_census(const PointSet& p, const PeelOptions& options = {});

struct LowerBoundAudit {
  bool holds = true;
  std::uint64_t states_checked = 0;
  std::optional<PeelState> violation;
};

/// Checks that every reachable state with more than d points has at least
/// d+1 hull vertices.
LowerBoundAudit lower_bound_audit(const PointSet& p);

BigCount factorial(unsigned n);

}  // namespace peelkit
