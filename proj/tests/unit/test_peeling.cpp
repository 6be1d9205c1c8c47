#include <doctest.h>

#include <algorithm>
#include <set>

#include "peelkit/combinatorics.hpp"
#include "peelkit/construction.hpp"
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

PointSet triangle_interior() { return set2({{0, 0}, {3, 0}, {0, 3}, {1, 1}}); }

PointSet regular_ish_triangle() { return set2({{2, 0}, {-1, 2}, {-1, -2}}); }

// Enumerates all orderings with std::next_permutation and keeps those where
// each removed point is a hull vertex of what remains (by LP membership).
BigCount permutation_count(const PointSet& p) {
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  BigCount total = 0;
  do {
    bool ok = true;
    for (std::size_t step = 0; step < order.size() && ok; ++step) {
      std::vector<std::size_t> rest(order.begin() + static_cast<long>(step) + 1, order.end());
      ok = !convex_membership(p[order[step]], p.subset(rest)).is_member();
    }
    if (ok) ++total;
  } while (std::next_permutation(order.begin(), order.end()));
  return total;
}

}  // namespace

TEST_CASE("peel counts of small examples") {
  PointSet pentagon = set2({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}});
  CHECK(peel_count(pentagon).count == 120);
  CHECK(peel_count(triangle_interior()).count == 18);
  CHECK(peel_count(line({0, 1, 2})).count == 4);
  CHECK(peel_count(set2({{1, 1}})).count == 1);
  CHECK(peel_count(PointSet(2, {})).count == 1);
}

TEST_CASE("naive counting") {
  CHECK(peel_count_naive(triangle_interior()) == 18);
  CHECK(peel_count_naive(set2({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}, {1, -2}})) == 720);
  CHECK(peel_count_naive(set2({{7, 7}})) == 1);
  PeelOptions small;
  small.naive_limit = 3;
  CHECK_THROWS_AS(peel_count_naive(triangle_interior(), small), InputError);
}

TEST_CASE("memoized count matches permutation enumeration") {
  for (std::uint64_t i = 0; i < 30; ++i) {
    const int d = 1 + static_cast<int>(i % 3);
    const PointSet s = sample_general_position(d, 2 + i % 6, 5, i);
    const BigCount expected = permutation_count(s);
    CHECK(peel_count(s).count == expected);
    CHECK(peel_count_naive(s) == expected);
  }
}

TEST_CASE("degenerate input is rejected with the offending subset") {
  try {
    peel_count(set2({{0, 0}, {1, 1}, {2, 2}, {5, 0}}));
    FAIL("expected DegenerateError");
  } catch (const DegenerateError& e) {
    CHECK(e.subset() == std::vector<std::size_t>{0, 1, 2});
  }
}

TEST_CASE("state budget") {
  PeelOptions tight;
  tight.state_budget = 3;
  const PointSet s = sample_general_position(2, 9, 3, 3);
  CHECK_THROWS_AS(peel_count(s, tight), ResourceError);
  CHECK(peel_count(s).visited_states > 3);
}

TEST_CASE("enumeration order and validity") {
  const auto seqs = peel_enumerate(triangle_interior(), 3);
  REQUIRE(seqs.size() == 3);
  CHECK(seqs[0] == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(seqs[1] == std::vector<std::size_t>{0, 1, 3, 2});
  CHECK(seqs[2] == std::vector<std::size_t>{0, 2, 1, 3});
  CHECK(std::is_sorted(seqs.begin(), seqs.end()));
  for (const auto& s : seqs) CHECK(is_peeling_sequence(triangle_interior(), s));
  CHECK(peel_enumerate(triangle_interior(), 0).empty());
  const auto two = peel_enumerate(set2({{0, 0}, {1, 0}}), 10);
  CHECK(two == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}});
  CHECK(peel_enumerate(triangle_interior(), 100).size() == 18);
  CHECK_FALSE(is_peeling_sequence(triangle_interior(), {3, 0, 1, 2}));
  PeelOptions o;
  o.enumerate = 5;
  const PeelReport r = peel_count(triangle_interior(), o);
  CHECK(r.enumerated == peel_enumerate(triangle_interior(), 5));
}

TEST_CASE("defense by peeling") {
  const Point o2{Scalar(0), Scalar(0)};
  CHECK(defends_by_peeling(regular_ish_triangle(), o2, 1));
  CHECK_FALSE(defends_by_peeling(regular_ish_triangle(), o2, 2));
  const Point o1{Scalar(0)};
  CHECK(defends_by_peeling(line({-2, -1, 1, 2}), o1, 2));
  CHECK_FALSE(defends_by_peeling(line({-2, -1, 1, 2}), o1, 3));
  CHECK_THROWS_AS(defends_by_peeling(set2({{1, 1}, {2, 2}}), o2, 1), DegenerateError);
}

TEST_CASE("defense is monotone in m") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const int d = 1 + static_cast<int>(i % 3);
    const PointSet s = sample_general_position(d, 3 + i % 6, 9, i);
    bool prev = true;
    for (int m = 1; m <= 4; ++m) {
      const bool now = defends_by_peeling(s, origin(d), m);
      CHECK((prev || !now));
      prev = now;
    }
  }
}

TEST_CASE("simplified census") {
  PointSet one = triangle_interior();
  one.blocks = std::vector<int>{0, 0, 0, 0};
  CHECK(simplified_census(one).distinct_sequences == 1);
  CHECK(simplified_census(one).max_active_blocks == 1);

  PointSet singletons = triangle_interior();
  singletons.blocks = std::vector<int>{0, 1, 2, 3};
  CHECK(simplified_census(singletons).distinct_sequences == 18);

  // Brute force: collapse each enumerated sequence to its block string.
  PointSet two = triangle_interior();
  two.blocks = std::vector<int>{0, 0, 1, 1};
  std::set<std::vector<int>> strings;
  for (const auto& seq : peel_enumerate(two, 1000)) {
    std::vector<int> w;
    for (auto i : seq) w.push_back((*two.blocks)[i]);
    strings.insert(w);
  }
  CHECK(simplified_census(two).distinct_sequences == strings.size());

  CHECK_THROWS_AS(simplified_census(triangle_interior()), InputError);

  const Construction c = build_sn(2, 1, 9, 4);
  const SimplifiedReport r = simplified_census(c.points);
  CHECK(r.max_active_blocks <= 3);
}

TEST_CASE("lower bound audit") {
  const LowerBoundAudit a = lower_bound_audit(triangle_interior());
  CHECK(a.holds);
  CHECK(peel_count(triangle_interior()).count == 3 * factorial(3));
  CHECK(lower_bound_audit(set2({{0, 0}, {1, 0}, {0, 1}})).holds);
  for (std::uint64_t i = 0; i < 20; ++i) {
    const int d = 1 + static_cast<int>(i % 3);
    const PointSet s = sample_general_position(d, static_cast<std::size_t>(d) + 1 + i % 7, 13, i);
    CHECK(lower_bound_audit(s).holds);
  }
}

TEST_CASE("counts are deterministic") {
  const PointSet s = sample_general_position(3, 10, 1, 1);
  const PeelReport a = peel_count(s);
  const PeelReport b = peel_count(s);
  CHECK(a.count == b.count);
  CHECK(a.visited_states == b.visited_states);
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == mpz_class("2432902008176640000"));
  CHECK(factorial(25) == mpz_class("15511210043330985984000000"));
}
