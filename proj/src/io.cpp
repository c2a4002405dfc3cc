#include "lxray/io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

namespace lxray {

namespace {

Int int_from_json(const Json& j, const std::string& context) {
    if (!j.is_number_integer())
        throw ParseError(context + ": expected an integer, got " + j.dump());
    // nlohmann stores values above INT64_MAX as uint64; is_number_integer() accepts them.
    if (j.is_number_unsigned() &&
        j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<Int>::max()))
        throw ParseError(context + ": integer out of range, got " + j.dump());
    return j.get<Int>();
}

LatticePoint point_from_json(const Json& j, const std::string& context) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError(context + ": expected an [x, y] pair, got " + j.dump());
    return {int_from_json(j[0], context), int_from_json(j[1], context)};
}

std::vector<LatticePoint> point_list_from_json(const Json& j, const std::string& field,
                                               const std::string& context) {
    if (!j.is_object() || !j.contains(field))
        throw ParseError(context + ": expected an object with a \"" + field + "\" array");
    const Json& arr = j.at(field);
    if (!arr.is_array()) throw ParseError(context + ": \"" + field + "\" must be an array");
    std::vector<LatticePoint> pts;
    pts.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i)
        pts.push_back(point_from_json(arr[i], context + ": " + field + "[" + std::to_string(i) + "]"));
    return pts;
}

}  // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

PointSet point_set_from_json(const Json& j, const std::string& context) {
    auto pts = point_list_from_json(j, "points", context);
    if (pts.empty()) throw ParseError(context + ": \"points\" must not be empty");
    return PointSet::from(std::move(pts));
}

ConvexLatticePolygon polygon_from_json(const Json& j, const std::string& context) {
    const std::string field = (j.is_object() && j.contains("polygon")) ? "polygon" : "points";
    auto pts = point_list_from_json(j, field, context);
    try {
        if (field == "polygon") return ConvexLatticePolygon::from_vertices(std::move(pts));
        return ConvexLatticePolygon::hull_of(PointSet::from(std::move(pts)));
    } catch (const Error& e) {
        throw InvalidPolygonError(context + ": " + e.what());
    }
}

std::vector<WidthEntry> width_entries_from_json(const Json& j, const std::string& context) {
    if (!j.is_object() || !j.contains("widths"))
        throw ParseError(context + ": expected an object with a \"widths\" array");
    const Json& arr = j.at("widths");
    if (!arr.is_array()) throw ParseError(context + ": \"widths\" must be an array");
    std::vector<WidthEntry> entries;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string ctx = context + ": widths[" + std::to_string(i) + "]";
        const Json& e = arr[i];
        if (!e.is_array() || e.size() != 3)
            throw ParseError(ctx + ": expected an [a, b, W] triple, got " + e.dump());
        Int a = int_from_json(e[0], ctx);
        Int b = int_from_json(e[1], ctx);
        Int w = int_from_json(e[2], ctx);
        if (a == 0 && b == 0) throw ParseError(ctx + ": zero direction");
        entries.push_back({primitive(a, b), w});
    }
    return entries;
}

PointSet load_point_set(const std::string& path) {
    return point_set_from_json(load_json_file(path), path);
}

ConvexLatticePolygon load_polygon(const std::string& path) {
    return polygon_from_json(load_json_file(path), path);
}

std::vector<WidthEntry> load_width_entries(const std::string& path) {
    return width_entries_from_json(load_json_file(path), path);
}

namespace {

Json points_to_json(const std::vector<LatticePoint>& pts) {
    Json arr = Json::array();
    for (const auto& p : pts) arr.push_back(Json::array({p.x, p.y}));
    return arr;
}

}  // namespace

Json to_json(const PointSet& s) { return Json{{"points", points_to_json(s.points())}}; }

Json to_json(const ConvexLatticePolygon& p) {
    return Json{{"polygon", points_to_json(p.vertices())}};
}

Json to_json(const ProjectionSignature& sig) {
    Json counts = Json::object();
    for (const auto& [u, c] : sig.counts)
        counts[std::to_string(u.a()) + "," + std::to_string(u.b())] = c;
    return Json{{"total", sig.total}, {"counts", counts}};
}

Json to_json(const UniquenessVerdict& v) {
    Json j{{"kind", "uniqueness"},
           {"equal_polygons", v.equal_polygons},
           {"first_signature_match", v.first_signature_match},
           {"dilate_signature_match", v.dilate_signature_match},
           {"theorem_violation", v.theorem_violation()}};
    if (v.witness_direction)
        j["witness_direction"] = Json::array({v.witness_direction->a(), v.witness_direction->b()});
    else
        j["witness_direction"] = nullptr;
    return j;
}

Json to_json(const CheckRecord& r) {
    return Json{{"kind", r.kind},
                {"polygon", points_to_json(r.polygon.vertices())},
                {"direction", Json::array({r.direction.a(), r.direction.b()})},
                {"holds", r.holds}};
}

Json to_json(const SweepReport& rep) {
    Json failures = Json::array();
    for (const auto& f : rep.failures) failures.push_back(to_json(f));
    Json j{{"kind", rep.kind},
           {"radius", rep.radius},
           {"polygons", rep.polygons},
           {"checks", rep.checks},
           {"failures", failures}};
    if (rep.kind == "check-lemma35") j["hypothesis_hits"] = rep.hypothesis_hits;
    return j;
}

Json to_json(const CollisionReport& rep) {
    Json classes = Json::array();
    for (const auto& cls : rep.classes) {
        Json members = Json::array();
        for (const auto& p : cls.polygons) members.push_back(points_to_json(p.vertices()));
        classes.push_back(Json{{"key", cls.key}, {"polygons", members}});
    }
    return Json{{"radius", rep.radius},
                {"polygons_enumerated", rep.polygons_enumerated},
                {"with_dilate", rep.with_dilate},
                {"collision_classes", classes}};
}

std::string polygon_json_line(const ConvexLatticePolygon& p) { return to_json(p).dump(); }

SignatureIndex SignatureIndex::load(const std::string& path) {
    SignatureIndex idx;
    std::ifstream in(path);
    if (!in) return idx;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const std::string ctx = path + ":" + std::to_string(lineno);
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw ParseError(ctx + ": missing tab separator");
        std::string key = line.substr(0, tab);
        Json j;
        try {
            j = Json::parse(line.substr(tab + 1));
        } catch (const Json::parse_error& e) {
            throw ParseError(ctx + ": " + e.what());
        }
        idx.insert(key, polygon_from_json(j, ctx));
    }
    return idx;
}

void SignatureIndex::save(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw ParseError(path + ": cannot open file for writing");
    for (const auto& [key, polygon] : entries_)
        out << key << '\t' << polygon_json_line(polygon) << '\n';
    if (!out) throw ParseError(path + ": write failed");
}

bool SignatureIndex::insert(const std::string& key, const ConvexLatticePolygon& p) {
    if (!seen_.insert(key + '\t' + polygon_json_line(p)).second) return false;
    entries_.emplace_back(key, p);
    return true;
}

}  // namespace lxray
