#include <doctest.h>

#include <functional>

#include "peelkit/bounds.hpp"
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

void check_partitions(const BlockTree& t) {
  if (t.children.empty()) return;
  const std::size_t total = t.point_count();
  const std::size_t parts = t.children.size();
  std::size_t sum = 0;
  for (const auto& c : t.children) {
    const std::size_t s = c.point_count();
    CHECK((s == total / parts || s == (total + parts - 1) / parts));
    sum += s;
    check_partitions(c);
  }
  CHECK(sum == total);
}

}  // namespace

TEST_CASE("partition sizes") {
  CHECK(partition_sizes(9, 3) == std::vector<std::size_t>{3, 3, 3});
  CHECK(partition_sizes(10, 4) == std::vector<std::size_t>{3, 3, 2, 2});
  CHECK(partition_sizes(2, 4) == std::vector<std::size_t>{1, 1, 0, 0});
}

TEST_CASE("flatten") {
  const PointSet p = set2({{0, 1}, {1, 3}, {2, -1}});
  const PointSet same = flatten(p, {Scalar(1), Scalar(1), Scalar(0)});
  CHECK(same == p);

  const PointSet five = set2({{0, 0}, {3, 1}, {1, 4}, {-2, 2}, {1, 1}});
  const PointSet flat = flatten(five, {Scalar(1, 10), Scalar(1, 100), std::nullopt});
  CHECK(peel_count(flat).count == peel_count(five).count);
  for (const auto& q : flat.points) CHECK(abs(q[1]) <= Scalar(1, 10));
}

TEST_CASE("rotation makes x-coordinates distinct") {
  const PointSet p = set2({{1, 0}, {1, 2}, {3, 5}});
  const Scalar t = choose_rotation(p);
  CHECK(t != 0);
  const PointSet r = rotate(p, t);
  CHECK(r[0][0] != r[1][0]);
  CHECK(squared_norm(r[0]) == squared_norm(p[0]));
}

TEST_CASE("place_block") {
  const PointSet single(2, {{Scalar(0), Scalar(0)}});
  const Point target{Scalar(2), Scalar(3)};
  CHECK(place_block(single, target).points == std::vector<Point>{target});

  const PointSet pair = set2({{0, 0}, {1, 0}});
  const Point up{Scalar(0), Scalar(1)};
  const PointSet placed = place_block(pair, up);
  for (const auto& q : placed.points) CHECK(q[0] == 0);
  CHECK(squared_norm(placed[0]) < squared_norm(placed[1]));
  CHECK(placed[1] == up);

  CHECK_THROWS_AS(place_block(pair, origin(2)), InputError);
}

TEST_CASE("flatten and place_block preserve the count") {
  for (std::uint64_t i = 0; i < 16; ++i) {
    const int d = 2 + static_cast<int>(i % 2);
    const PointSet s = sample_general_position(d, 3 + i % 6, 17, i);
    const BigCount g = peel_count(s).count;
    const PointSet flat = flatten(s, {Scalar(1, 8), Scalar(1, 64), std::nullopt});
    CHECK(peel_count(flat).count == g);
    Point t = origin(d);
    t[0] = Scalar(-1, 3);
    t[static_cast<std::size_t>(d - 1)] = Scalar(5, 7);
    CHECK(peel_count(place_block(flat, t)).count == g);
  }
}

TEST_CASE("small constructions are base-set prefixes") {
  const BaseSet base = base_set(3, 1);
  for (std::size_t n = 1; n <= 4; ++n) {
    const Construction c = build_sn(3, 1, n, 5);
    CHECK(c.points.points == std::vector<Point>(base.points.points.begin(), base.points.points.begin() + static_cast<long>(n)));
  }
}

TEST_CASE("construction blocks and partitions") {
  const Construction c = build_sn(3, 1, 8, 7);
  REQUIRE(c.points.blocks);
  std::vector<int> sizes(4, 0);
  for (int b : *c.points.blocks) ++sizes.at(static_cast<std::size_t>(b));
  CHECK(sizes == std::vector<int>{2, 2, 2, 2});
  CHECK(c.tree.point_count() == 8);
  check_partitions(c.tree);
  check_partitions(build_sn(2, 2, 40, 9).tree);
  CHECK(c.delta == Scalar(1, 128));
  CHECK(c.eps == Scalar(1, 16384));
  CHECK(is_general_position(c.points.with_point(origin(3))));
}

TEST_CASE("certified constructions") {
  const CertifiedConstruction a = build_certified(2, 1, 9);
  CHECK(a.certificate.passed());
  CHECK(a.certified_up_to == 9);
  CHECK(a.certificate.max_active_blocks <= 3);
  CHECK(a.certificate.count <= a.certificate.lemma_bound_value);
  CHECK(a.certificate.count == peel_count(a.construction.points).count);

  const CertifiedConstruction b = build_certified(3, 1, 8);
  CHECK(b.certificate.passed());
  REQUIRE(b.certificate.theorem2_bound);
  CHECK(*b.certificate.theorem2_bound);
  CHECK(Scalar(b.certificate.count) <= *b.certificate.theorem2_upper);
}

TEST_CASE("equal delta and eps breaks outermost-only removal") {
  const Construction broken = build_sn(2, 1, 9, Scalar(1, 2), Scalar(1, 2));
  const ConstructionCertificate cert = certify_construction(broken.points, 2, 1);
  CHECK_FALSE(cert.outermost_only);
  CHECK_FALSE(cert.passed());
  CHECK_THROWS_AS(build_sn(2, 1, 9, Scalar(1, 4), Scalar(1, 2)), InputError);
}
