#include "lxray/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>

namespace lxray {

std::vector<PrimitiveDirection> candidate_directions(Int radius) {
    if (radius < 1) throw std::invalid_argument("radius must be >= 1");
    Int budget = checked_mul(2, radius);
    std::vector<PrimitiveDirection> dirs;
    dirs.push_back(primitive(1, 0));
    for (Int b = 1; b <= budget; ++b)
        for (Int a = -budget; a <= budget; ++a)
            if (gcd_abs(a, b) == 1) dirs.push_back(primitive(a, b));
    // ascending angle in [0, pi): u before v iff cross(u, v) > 0
    std::sort(dirs.begin(), dirs.end(), [](const PrimitiveDirection& u, const PrimitiveDirection& v) {
        return cross(u.vec(), v.vec()) > 0;
    });
    return dirs;
}

namespace {

struct EnumState {
    const std::vector<PrimitiveDirection>& dirs;
    const PolygonSink& emit;
    std::size_t max_dirs;                       // max distinct directions (vertex cap / 2)
    std::vector<std::pair<int, Int>> chosen;    // (direction index, multiplicity)

    // Builds the polygon for the currently chosen edge system. S = sum m*u
    // must be even in both coordinates by the time this is called.
    void build(const LatticePoint& s) {
        LatticePoint v0{-s.x / 2, -s.y / 2};
        std::vector<LatticePoint> verts;
        verts.reserve(2 * chosen.size());
        LatticePoint cur = v0;
        for (const auto& [di, m] : chosen) {
            verts.push_back(cur);
            cur = cur + dirs[di].vec() * m;
        }
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            verts.push_back(-verts[i]);
        }
        emit(ConvexLatticePolygon::from_vertices(std::move(verts)));
    }

    // Extends the edge system with directions of index > last, given the
    // remaining budgets bx = 2R - sum m|a| and by = 2R - sum m*b.
    void extend(int last, Int bx, Int by, const LatticePoint& s) {
        if (chosen.size() >= 2 && s.x % 2 == 0 && s.y % 2 == 0) build(s);
        if (chosen.size() == max_dirs) return;
        for (int j = last + 1; j < static_cast<int>(dirs.size()); ++j) {
            const LatticePoint u = dirs[j].vec();
            Int ca = checked_abs(u.x);
            if ((ca != 0 && ca > bx) || (u.y != 0 && u.y > by)) continue;
            // at least one of ca, u.y is nonzero, so mmax ends up finite
            Int mmax = std::numeric_limits<Int>::max();
            if (ca != 0) mmax = bx / ca;
            if (u.y != 0) mmax = std::min(mmax, by / u.y);
            chosen.emplace_back(j, 0);
            LatticePoint acc = s;
            for (Int m = 1; m <= mmax; ++m) {
                acc = acc + u;
                chosen.back().second = m;
                extend(j, bx - m * ca, by - m * u.y, acc);
            }
            chosen.pop_back();
        }
    }
};

}  // namespace

std::vector<Shard> enumeration_shards(const EnumerationSpec& spec) {
    if (spec.radius < 1) throw std::invalid_argument("radius must be >= 1");
    if (spec.max_vertices && (*spec.max_vertices < 4 || *spec.max_vertices % 2 != 0))
        throw std::invalid_argument("max_vertices must be an even number >= 4");
    auto dirs = candidate_directions(spec.radius);
    Int budget = 2 * spec.radius;
    std::vector<Shard> shards;
    for (int i = 0; i < static_cast<int>(dirs.size()); ++i) {
        const LatticePoint u = dirs[i].vec();
        Int ca = checked_abs(u.x);
        Int mmax = std::numeric_limits<Int>::max();
        if (ca != 0) mmax = budget / ca;
        if (u.y != 0) mmax = std::min(mmax, budget / u.y);
        for (Int m = 1; m <= mmax; ++m) shards.push_back({i, m});
    }
    return shards;
}

void enumerate_shard(const EnumerationSpec& spec, const Shard& shard, const PolygonSink& emit) {
    auto dirs = candidate_directions(spec.radius);
    Int budget = 2 * spec.radius;
    std::size_t max_dirs = spec.max_vertices ? static_cast<std::size_t>(*spec.max_vertices / 2)
                                             : dirs.size();
    EnumState st{dirs, emit, max_dirs, {}};
    const int i = shard.first_direction;
    const Int m = shard.first_multiplicity;
    const LatticePoint u = dirs[i].vec();
    Int ca = checked_abs(u.x);
    st.chosen.emplace_back(i, m);
    st.extend(i, budget - m * ca, budget - m * u.y, u * m);
}

void enumerate_symmetric_polygons(const EnumerationSpec& spec, const PolygonSink& emit) {
    for (const auto& shard : enumeration_shards(spec)) enumerate_shard(spec, shard, emit);
}

std::vector<ConvexLatticePolygon> enumerate_symmetric_polygons(const EnumerationSpec& spec) {
    std::vector<ConvexLatticePolygon> out;
    enumerate_symmetric_polygons(spec, [&](const ConvexLatticePolygon& p) { out.push_back(p); });
    return out;
}

int resolve_worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("LATTICE_XRAY_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string collision_key(const ConvexLatticePolygon& p, bool with_dilate) {
    std::string key = signature_key(signature_of_polygon(p, 1));
    if (with_dilate) key += "|" + signature_key(signature_of_polygon(p, 2));
    return key;
}

std::vector<CollisionClass> group_by_key(
    const std::vector<std::pair<std::string, ConvexLatticePolygon>>& entries) {
    std::map<std::string, std::vector<ConvexLatticePolygon>> groups;
    for (const auto& [key, polygon] : entries) groups[key].push_back(polygon);
    std::vector<CollisionClass> classes;
    for (auto& [key, members] : groups)
        if (members.size() >= 2) classes.push_back({key, std::move(members)});
    return classes;
}

CollisionScan scan_collisions_by_key(const EnumerationSpec& spec, const SignatureKeyFn& key_fn,
                                     bool with_dilate, int workers) {
    auto shards = enumeration_shards(spec);
    using ShardEntries = std::vector<std::pair<std::string, ConvexLatticePolygon>>;
    auto results = map_shards<ShardEntries>(
        shards, resolve_worker_count(workers), [&](const Shard& shard) {
            ShardEntries entries;
            enumerate_shard(spec, shard, [&](const ConvexLatticePolygon& p) {
                entries.emplace_back(key_fn(p), p);
            });
            return entries;
        });

    CollisionScan scan;
    for (auto& shard_entries : results)
        for (auto& e : shard_entries) scan.entries.push_back(std::move(e));
    scan.report.radius = spec.radius;
    scan.report.polygons_enumerated = static_cast<Int>(scan.entries.size());
    scan.report.with_dilate = with_dilate;
    scan.report.classes = group_by_key(scan.entries);
    return scan;
}

CollisionScan scan_collisions(const EnumerationSpec& spec, bool with_dilate, int workers) {
    return scan_collisions_by_key(
        spec, [&](const ConvexLatticePolygon& p) { return collision_key(p, with_dilate); },
        with_dilate, workers);
}

CollisionReport find_collisions(const EnumerationSpec& spec, bool with_dilate, int workers) {
    return scan_collisions(spec, with_dilate, workers).report;
}

TheoremViolationError::TheoremViolationError(CollisionReport report)
    : Error("projection signatures collide under the two-dilation key at radius " +
            std::to_string(report.radius) + " (" + std::to_string(report.classes.size()) +
            " class(es))"),
      report_(std::move(report)) {}

CollisionReport escalate_collisions(CollisionReport report) {
    if (!report.classes.empty()) throw TheoremViolationError(std::move(report));
    return report;
}

CollisionReport verify_theorem12(const EnumerationSpec& spec, int workers) {
    return escalate_collisions(find_collisions(spec, true, workers));
}

}  // namespace lxray
