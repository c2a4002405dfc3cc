#pragma once

// Exhaustive enumeration of origin-symmetric convex lattice polygons inside
// [-R,R]^2, deterministic sharded parallelism, and the projection-signature
// collision search.
//
// Enumeration scheme: walking counterclockwise, the edges of an
// origin-symmetric convex polygon are m_1*u_1, ..., m_n*u_n followed by
// their negations, where u_1 < ... < u_n (n >= 2) are distinct canonical
// primitive directions in ascending angle order and each multiplicity
// m_i >= 1. The walk starts at v0 = -S/2 with S = sum m_i * u_i, so both
// coordinates of S must be even; the polygon fits in [-R,R]^2 exactly when
// sum m_i*|a_i| <= 2R and sum m_i*b_i <= 2R. Distinct edge systems give
// distinct polygons, so every polygon is produced exactly once.

#include <atomic>
#include <cstddef>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lxray/projection.hpp"

namespace lxray {

struct EnumerationSpec {
    Int radius = 1;
    std::optional<int> max_vertices;  // even cap on the vertex count
};

// A unit of enumeration work: all polygons whose angle-smallest edge uses
// candidate direction first_direction with multiplicity first_multiplicity.
// Shards are processed and merged in lexicographic (direction index,
// multiplicity) order, which makes every parallel result deterministic.
struct Shard {
    int first_direction = 0;
    Int first_multiplicity = 1;

    friend auto operator<=>(const Shard&, const Shard&) = default;
};

// Canonical primitive directions usable as edges inside [-R,R]^2
// (|a| <= 2R, 0 <= b <= 2R), sorted by ascending angle in [0, pi).
std::vector<PrimitiveDirection> candidate_directions(Int radius);

std::vector<Shard> enumeration_shards(const EnumerationSpec& spec);

using PolygonSink = std::function<void(const ConvexLatticePolygon&)>;

void enumerate_shard(const EnumerationSpec& spec, const Shard& shard, const PolygonSink& emit);

// All polygons, in shard order (single-threaded).
void enumerate_symmetric_polygons(const EnumerationSpec& spec, const PolygonSink& emit);
std::vector<ConvexLatticePolygon> enumerate_symmetric_polygons(const EnumerationSpec& spec);

// Effective worker count: requested if positive, else the LATTICE_XRAY_THREADS
// environment variable if set, else the hardware concurrency. Always >= 1.
int resolve_worker_count(int requested);

// Applies fn to every shard on `workers` threads (work-stealing via an atomic
// cursor) and returns the per-shard results in shard order. The first
// exception thrown by fn, if any, is rethrown after all threads join.
template <typename R, typename Fn>
std::vector<R> map_shards(const std::vector<Shard>& shards, int workers, Fn&& fn) {
    std::vector<R> out(shards.size());
    if (shards.empty()) return out;
    workers = std::min<int>(std::max(workers, 1), static_cast<int>(shards.size()));

    std::atomic<std::size_t> cursor{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto run = [&] {
        for (;;) {
            std::size_t i = cursor.fetch_add(1, std::memory_order_relaxed);
            if (i >= shards.size()) return;
            try {
                out[i] = fn(shards[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t) pool.emplace_back(run);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    return out;
}

struct CollisionClass {
    std::string key;
    std::vector<ConvexLatticePolygon> polygons;  // in enumeration order

    friend bool operator==(const CollisionClass&, const CollisionClass&) = default;
};

struct CollisionReport {
    Int radius = 0;
    Int polygons_enumerated = 0;
    bool with_dilate = false;
    std::vector<CollisionClass> classes;  // sorted by key

    friend bool operator==(const CollisionReport&, const CollisionReport&) = default;
};

// Key under which polygons are grouped: the dilation-1 signature key, with
// the dilation-2 key appended after '|' when with_dilate is set.
std::string collision_key(const ConvexLatticePolygon& p, bool with_dilate);

using SignatureKeyFn = std::function<std::string(const ConvexLatticePolygon&)>;

// Groups keyed polygons; classes are the key groups with >= 2 entries,
// sorted by key, members in input order. Duplicates are not removed.
std::vector<CollisionClass> group_by_key(
    const std::vector<std::pair<std::string, ConvexLatticePolygon>>& entries);

struct CollisionScan {
    CollisionReport report;
    // every enumerated polygon with its key, in enumeration order
    std::vector<std::pair<std::string, ConvexLatticePolygon>> entries;
};

CollisionScan scan_collisions(const EnumerationSpec& spec, bool with_dilate, int workers = 0);

// Custom key hook; used by the verification suite to check that the search
// actually reacts to weakened keys.
CollisionScan scan_collisions_by_key(const EnumerationSpec& spec, const SignatureKeyFn& key_fn,
                                     bool with_dilate, int workers = 0);

CollisionReport find_collisions(const EnumerationSpec& spec, bool with_dilate, int workers = 0);

class TheoremViolationError : public Error {
  public:
    explicit TheoremViolationError(CollisionReport report);
    const CollisionReport& report() const { return report_; }

  private:
    CollisionReport report_;
};

// Throws TheoremViolationError if report has collision classes, else returns
// it unchanged.
CollisionReport escalate_collisions(CollisionReport report);

// Full two-dilation uniqueness sweep at the given radius. Returns the clean
// report; a nonempty with-dilate collision class is a theorem violation and
// raises TheoremViolationError carrying the report.
CollisionReport verify_theorem12(const EnumerationSpec& spec, int workers = 0);

}  // namespace lxray
