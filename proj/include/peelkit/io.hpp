#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "peelkit/construction.hpp"
#include "peelkit/enclosure.hpp"
#include "peelkit/point_set.hpp"

namespace peelkit {

using Json = nlohmann::ordered_json;

/// On-disk point set: {"dim", "points", "labels"?, "blocks"?, "meta"}.
struct PointSetFile {
  PointSet points;
  Json meta = Json::object();
};

Json point_set_to_json(const PointSet& p, const Json& meta = Json::object());

/// Throws InputError on malformed content; validates the point set.
PointSetFile point_set_from_json(const Json& j);

std::string serialize_point_set(const PointSet& p, const Json& meta = Json::object());
PointSetFile parse_point_set(const std::string& text);

PointSetFile read_point_set_file(const std::filesystem::path& path);
void write_point_set_file(const std::filesystem::path& path, const PointSet& p, const Json& meta = Json::object());

Json block_tree_to_json(const BlockTree& tree);

/// ["lo", "hi"] as rational strings.
Json enclosure_to_json(const Enclosure& e);

Point parse_point(const std::string& csv, int dim);

}  // namespace peelkit
