#pragma once

// File formats and JSON serialization.
//   point set file:  {"points":  [[x, y], ...]}
//   polygon file:    {"polygon": [[x, y], ...]}   ({"points": ...} accepted)
//   widths file:     {"widths":  [[a, b, W], ...]}
//   signature index: one line per entry, "key<TAB>{\"polygon\": ...}"
// Malformed input raises ParseError with the offending file and field.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lxray/search.hpp"
#include "lxray/theorems.hpp"

namespace lxray {

using Json = nlohmann::json;

// Parses a whole JSON file; raises ParseError naming the path.
Json load_json_file(const std::string& path);

PointSet point_set_from_json(const Json& j, const std::string& context);
ConvexLatticePolygon polygon_from_json(const Json& j, const std::string& context);
std::vector<WidthEntry> width_entries_from_json(const Json& j, const std::string& context);

PointSet load_point_set(const std::string& path);
ConvexLatticePolygon load_polygon(const std::string& path);
std::vector<WidthEntry> load_width_entries(const std::string& path);

Json to_json(const PointSet& s);
Json to_json(const ConvexLatticePolygon& p);
Json to_json(const ProjectionSignature& sig);
Json to_json(const UniquenessVerdict& v);
Json to_json(const CheckRecord& r);
Json to_json(const SweepReport& rep);
Json to_json(const CollisionReport& rep);

// Compact single-line polygon record, as used in enumeration output and the
// signature index.
std::string polygon_json_line(const ConvexLatticePolygon& p);

// Append-only store of (signature key, polygon) pairs backing multi-session
// collision searches. Exact duplicate pairs are kept once; entry order is
// load order then insertion order, so merged reports stay deterministic.
class SignatureIndex {
  public:
    SignatureIndex() = default;

    // Missing file loads as an empty index.
    static SignatureIndex load(const std::string& path);
    void save(const std::string& path) const;

    // false when the exact pair was already present
    bool insert(const std::string& key, const ConvexLatticePolygon& p);

    const std::vector<std::pair<std::string, ConvexLatticePolygon>>& entries() const {
        return entries_;
    }

  private:
    std::vector<std::pair<std::string, ConvexLatticePolygon>> entries_;
    std::set<std::string> seen_;  // "key\tpolygon-json" lines already present
};

}  // namespace lxray
