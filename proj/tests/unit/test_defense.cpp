#include <doctest.h>

#include <set>

#include "peelkit/bounds.hpp"
#include "peelkit/combinatorics.hpp"
#include "peelkit/defense.hpp"
#include "peelkit/errors.hpp"
#include "peelkit/geom.hpp"
#include "peelkit/peeling.hpp"

using namespace peelkit;

namespace {

PointSet set2(std::initializer_list<std::pair<Scalar, Scalar>> xs) {
  PointSet s(2, {});
  for (const auto& [x, y] : xs) s.points.push_back({x, y});
  return s;
}

PointSet line(std::initializer_list<long> xs) {
  PointSet s(1, {});
  for (long x : xs) s.points.push_back({Scalar(x)});
  return s;
}

// Planar depth by sweeping directions: for each point q the two directions
// perpendicular to q, nudged either way, are the critical ones.
int planar_depth_sweep(const PointSet& s) {
  if (s.empty()) return 0;
  int best = static_cast<int>(s.size());
  const Scalar nudge(1, 1000000);
  for (const auto& q : s.points) {
    const Point perp{-q[1], q[0]};
    for (int sign_perp : {1, -1})
      for (int sign_nudge : {1, -1}) {
        const Point u{Scalar(sign_perp) * perp[0] + Scalar(sign_nudge) * nudge * q[0],
                      Scalar(sign_perp) * perp[1] + Scalar(sign_nudge) * nudge * q[1]};
        int count = 0;
        for (const auto& x : s.points)
          if (dot(u, x) > 0) ++count;
        best = std::min(best, count);
      }
  }
  return best;
}

}  // namespace

TEST_CASE("depth of small examples") {
  const Point o2{Scalar(0), Scalar(0)};
  const PointSet tri = set2({{2, 0}, {-1, 2}, {-1, -2}});
  CHECK(open_halfspace_depth(tri, o2).depth == 1);
  CHECK(depth_oracle(tri, o2) == 1);
  CHECK(open_halfspace_depth(line({-2, -1, 1, 2}), {Scalar(0)}).depth == 2);
  CHECK(open_halfspace_depth(gale_set(2, 2), o2).depth == 2);
  CHECK(depth_oracle(gale_set(2, 2), o2) == 2);
  const PointSet one_sided = set2({{1, 1}, {2, 5}, {3, 2}});
  CHECK(open_halfspace_depth(one_sided, o2).depth == 0);
  CHECK(depth_oracle(one_sided, o2) == 0);
  const DepthReport r = open_halfspace_depth(tri, o2);
  CHECK(open_count(tri, o2, r.witness) == 1);
  CHECK_THROWS_AS(open_halfspace_depth(set2({{1, 1}, {2, 2}}), o2), DegenerateError);
}

TEST_CASE("depth matches an angular sweep in the plane") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const PointSet s = sample_general_position(2, 1 + i % 10, 3, i);
    CHECK(open_halfspace_depth(s, origin(2)).depth == planar_depth_sweep(s));
  }
}

TEST_CASE("depth oracle agreement in higher dimension") {
  for (std::uint64_t i = 0; i < 30; ++i) {
    const int d = 3 + static_cast<int>(i % 2);
    const PointSet s = sample_general_position(d, 3 + i % 8, 4, i);
    CHECK(open_halfspace_depth(s, origin(d)).depth == depth_oracle(s, origin(d)));
  }
}

TEST_CASE("gale sets") {
  for (int d = 1; d <= 4; ++d)
    for (int m = 1; m <= 3; ++m) {
      const PointSet g = gale_set(d, m);
      CHECK(static_cast<int>(g.size()) == d + 2 * m - 1);
      CHECK(is_general_position(g.with_point(origin(d))));
      CHECK(open_halfspace_depth(g, origin(d)).depth == m);
    }
  const PointSet g1 = gale_set(1, 3);
  int left = 0;
  for (const auto& p : g1.points)
    if (p[0] < 0) ++left;
  CHECK(left == 3);
  CHECK(hull_vertices(gale_set(3, 1)).size() == 4);
  CHECK(convex_membership(origin(3), gale_set(3, 1)).is_member());
}

TEST_CASE("base sets") {
  const BaseSet b1 = base_set(2, 1);
  // Same as the Gale set up to one common positive scale factor.
  const PointSet g21 = gale_set(2, 1);
  REQUIRE(b1.points.size() == g21.size());
  const Scalar factor = b1.points[0][0] / g21[0][0];
  CHECK(factor > 0);
  for (std::size_t i = 0; i < g21.size(); ++i) CHECK(b1.points[i] == factor * g21[i]);
  CHECK(b1.scaling_radii.empty());

  const BaseSet b23 = base_set(2, 3);
  CHECK(b23.points.size() == 7);
  CHECK(b23.scaling_radii.size() == 2);
  CHECK(defends_by_peeling(b23.points, origin(2), 3));

  const BaseSet b32 = base_set(3, 2);
  CHECK(b32.points.size() == 6);
  CHECK(defends_by_peeling(b32.points, origin(3), 2));

  // Every state reached in the first m steps of peeling S u {0} has at most
  // d+m hull vertices.
  for (const auto& [d, m] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 2}}) {
    const PointSet u = base_set(d, m).points.with_point(origin(d));
    const HullIndex index(u);
    std::set<PeelState> level{index.full()};
    for (int step = 0; step < m; ++step) {
      std::set<PeelState> next;
      for (PeelState s : level) {
        const PeelState h = index.hull(s);
        CHECK(popcount(h) <= d + m);
        for (std::size_t i = 0; i < u.size(); ++i)
          if (h & bit(i)) next.insert(s & ~bit(i));
      }
      level = std::move(next);
    }
  }
}

TEST_CASE("defense equivalence on generated sets") {
  for (int d = 1; d <= 3; ++d)
    for (int m = 1; m <= 3; ++m) {
      const PointSet g = gale_set(d, m);
      for (int k = 1; k <= 4; ++k) CHECK(defends_by_peeling(g, origin(d), k) == (k <= m));
    }
}

TEST_CASE("radial scaling leaves depth unchanged") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const PointSet s = sample_general_position(2, 5 + i % 4, 6, i);
    const int depth = open_halfspace_depth(s, origin(2)).depth;
    for (std::size_t j = 0; j < s.size(); ++j) {
      PointSet t = s;
      t.points[j] = Scalar(3, 1 + static_cast<long>(j)) * t.points[j];
      CHECK(open_halfspace_depth(t, origin(2)).depth == depth);
    }
  }
}

TEST_CASE("below-threshold search") {
  const ThresholdReport r = below_threshold_search(2, 2, 1000, 0);
  CHECK(r.trials == 1000);
  CHECK(r.max_depth <= 1);
  CHECK(below_threshold_search(1, 3, 200, 5).max_depth <= 2);
  const ThresholdReport single = below_threshold_search(3, 2, 1, 9);
  CHECK(single.trials == 1);
  CHECK(single.worst.size() == 5);
  CHECK(open_halfspace_depth(single.worst, origin(3)).depth == single.max_depth);
}

TEST_CASE("sampling is deterministic") {
  CHECK(sample_general_position(3, 7, 42, 1) == sample_general_position(3, 7, 42, 1));
  CHECK_FALSE(sample_general_position(3, 7, 42, 1) == sample_general_position(3, 7, 42, 2));
}
