#include <doctest.h>

#include <filesystem>

#include "peelkit/construction.hpp"
#include "peelkit/defense.hpp"
#include "peelkit/errors.hpp"
#include "peelkit/io.hpp"
#include "peelkit/svg.hpp"
#include "peelkit/verify.hpp"

using namespace peelkit;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("point set round-trip is exact") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    PointSet s = sample_general_position(1 + static_cast<int>(i % 4), 1 + i % 9, 8, i);
    s.points[0][0] = Scalar("-123456789123456789/987654321987654323");
    const PointSetFile back = parse_point_set(serialize_point_set(s));
    CHECK(back.points == s);
  }
  const Construction c = build_sn(3, 1, 8, 7);
  const Json meta{{"d", 3}, {"block_tree", block_tree_to_json(c.tree)}};
  const PointSetFile back = parse_point_set(serialize_point_set(c.points, meta));
  CHECK(back.points == c.points);
  CHECK(back.meta["d"] == 3);
  CHECK(back.meta.contains("block_tree"));
}

TEST_CASE("file format details") {
  const PointSetFile f = parse_point_set(R"({"dim":2,"points":[["1/2",3],["-4","0"]],"labels":["a","b"],"blocks":[0,1]})");
  CHECK(f.points.dim == 2);
  CHECK(f.points[0][0] == Scalar(1, 2));
  CHECK(f.points[0][1] == 3);
  REQUIRE(f.points.labels);
  CHECK((*f.points.labels)[1] == "b");
  const Json j = point_set_to_json(f.points);
  CHECK(j["points"][0][0] == "1/2");
  CHECK(j["points"][0][1] == "3");
}

TEST_CASE("malformed files are input errors") {
  CHECK_THROWS_AS(parse_point_set("not json"), InputError);
  CHECK_THROWS_AS(parse_point_set(R"({"points":[["1","2"]]})"), InputError);
  CHECK_THROWS_AS(parse_point_set(R"({"dim":2,"points":[["1"]]})"), InputError);
  CHECK_THROWS_AS(parse_point_set(R"({"dim":2,"points":[["1","2/0"]]})"), InputError);
  CHECK_THROWS_AS(parse_point_set(R"({"dim":1,"points":[["1"],["1"]]})"), InputError);
  CHECK_THROWS_AS(parse_point_set(R"({"dim":1,"points":[["1"]],"blocks":[0,1]})"), InputError);
  CHECK_THROWS_AS(read_point_set_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("file write and read") {
  const auto path = std::filesystem::temp_directory_path() / "peelkit_io_test.json";
  const PointSet g = gale_set(3, 2);
  write_point_set_file(path, g, Json{{"kind", "gale"}});
  const PointSetFile back = read_point_set_file(path);
  CHECK(back.points == g);
  CHECK(back.meta["kind"] == "gale");
  std::filesystem::remove(path);
}

TEST_CASE("coordinate lists") {
  CHECK(parse_point("1/2,-3", 2) == Point{Scalar(1, 2), Scalar(-3)});
  CHECK_THROWS_AS(parse_point("1,2,3", 2), InputError);
}

TEST_CASE("enclosure json") {
  const Json j = enclosure_to_json(Enclosure{Scalar(1, 3), Scalar(1, 2)});
  CHECK(j == Json::array({"1/3", "1/2"}));
}

TEST_CASE("svg rendering") {
  const Construction c = build_sn(2, 1, 9, 4);
  const std::string svg = render_svg(c.points);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(occurrences(svg, "<polyline") == 3);
  const std::string one = render_svg(PointSet(2, {{Scalar(1), Scalar(2)}}));
  CHECK(occurrences(one, "<circle") == 1);
  const Construction c3 = build_sn(3, 1, 8, 7);
  PlotOptions xz;
  xz.axis_y = 2;
  CHECK_NOTHROW(render_svg(c3.points, xz));
  PlotOptions bad;
  bad.axis_y = 3;
  CHECK_THROWS_AS(render_svg(c3.points, bad), InputError);
  bad.axis_y = 0;
  CHECK_THROWS_AS(render_svg(c3.points, bad), InputError);
}

TEST_CASE("verify suites report anchors") {
  const auto results = run_suite("bounds", 0);
  REQUIRE_FALSE(results.empty());
  for (const auto& r : results) {
    CHECK(r.passed);
    CHECK_FALSE(r.anchor.empty());
  }
  CHECK_THROWS_AS(run_suite("nope", 0), InputError);
}
