#include "peelkit/io.hpp"

#include <fstream>
#include <sstream>

#include "peelkit/errors.hpp"

namespace peelkit {

Json point_set_to_json(const PointSet& p, const Json& meta) {
  Json j;
  j["dim"] = p.dim;
  Json pts = Json::array();
  for (const auto& q : p.points) {
    Json coords = Json::array();
    for (const auto& c : q) coords.push_back(format_scalar(c));
    pts.push_back(std::move(coords));
  }
  j["points"] = std::move(pts);
  if (p.labels) j["labels"] = *p.labels;
  if (p.blocks) j["blocks"] = *p.blocks;
  j["meta"] = meta.is_null() ? Json::object() : meta;
  return j;
}

namespace {

Scalar coordinate_from_json(const Json& c) {
  if (c.is_string()) return parse_scalar(c.get<std::string>());
  if (c.is_number_integer()) return Scalar(mpz_class(std::to_string(c.get<long long>())));
  throw InputError("coordinates must be rational strings or integers");
}

}  // namespace

PointSetFile point_set_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("point set file must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) throw InputError("missing integer field 'dim'");
  if (!j.contains("points") || !j["points"].is_array()) throw InputError("missing array field 'points'");
  PointSetFile f;
  f.points.dim = j["dim"].get<int>();
  for (const auto& row : j["points"]) {
    if (!row.is_array()) throw InputError("each point must be an array of coordinates");
    Point q;
    for (const auto& c : row) q.push_back(coordinate_from_json(c));
    f.points.points.push_back(std::move(q));
  }
  try {
    if (j.contains("labels") && !j["labels"].is_null()) f.points.labels = j["labels"].get<std::vector<std::string>>();
    if (j.contains("blocks") && !j["blocks"].is_null()) f.points.blocks = j["blocks"].get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad labels/blocks: ") + e.what());
  }
  if (j.contains("meta")) f.meta = j["meta"];
  f.points.validate();
  return f;
}

std::string serialize_point_set(const PointSet& p, const Json& meta) { return point_set_to_json(p, meta).dump(2) + "\n"; }

PointSetFile parse_point_set(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return point_set_from_json(j);
}

PointSetFile read_point_set_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_point_set(buf.str());
}

void write_point_set_file(const std::filesystem::path& path, const PointSet& p, const Json& meta) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << serialize_point_set(p, meta);
}

Json block_tree_to_json(const BlockTree& tree) {
  Json j;
  j["block_id"] = tree.block_id;
  if (tree.placement) {
    Json p = Json::array();
    for (const auto& c : *tree.placement) p.push_back(format_scalar(c));
    j["placement"] = std::move(p);
  }
  j["child_sizes"] = tree.child_sizes;
  Json children = Json::array();
  for (const auto& c : tree.children) children.push_back(block_tree_to_json(c));
  j["children"] = std::move(children);
  j["leaf_points"] = tree.leaf_points;
  return j;
}

Json enclosure_to_json(const Enclosure& e) { return Json::array({format_scalar(e.lo), format_scalar(e.hi)}); }

Point parse_point(const std::string& csv, int dim) {
  Point p;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) p.push_back(parse_scalar(item));
  if (static_cast<int>(p.size()) != dim) {
    throw InputError("point '" + csv + "' has " + std::to_string(p.size()) + " coordinates, expected " +
                     std::to_string(dim));
  }
  return p;
}

}  // namespace peelkit
