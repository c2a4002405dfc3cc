#include "lxray/theorems.hpp"

#include <algorithm>
#include <utility>

namespace lxray {

namespace {

// shared one-liners so the operations and the sweeps test the same formulas
bool doubling_hypothesis(Int c1, Int c2) {
    return checked_mul(2, checked_sub(c1, 1)) == checked_sub(c2, 1);
}

bool width_conclusion(Int c1, Int width) {
    return c1 == checked_add(width, 1);
}

// u lies in the difference-direction support of s iff two points of s share
// a line parallel to u, i.e. iff the projection count is below the size.
Int count_with_membership(const PointSet& s, const PrimitiveDirection& u) {
    Int c = projection_count(s, u);
    if (c == static_cast<Int>(s.size()))
        throw DirectionNotInD1Error("direction (" + std::to_string(u.a()) + "," +
                                    std::to_string(u.b()) +
                                    ") is not a difference direction of the set");
    return c;
}

}  // namespace

Int edge_formula_count(const ConvexLatticePolygon& p, const PrimitiveDirection& u) {
    auto edges = edge_directions(p);
    if (!std::binary_search(edges.begin(), edges.end(), u))
        throw NotAnEdgeDirectionError("direction (" + std::to_string(u.a()) + "," +
                                      std::to_string(u.b()) + ") is not an edge direction");
    return checked_add(integer_width(p, u), 1);
}

bool lemma35_applies(const ConvexLatticePolygon& p, const PrimitiveDirection& u) {
    Int c1 = count_with_membership(p.lattice_points(1), u);
    Int c2 = projection_count(p.lattice_points(2), u);
    return doubling_hypothesis(c1, c2);
}

bool lemma35_conclusion_holds(const ConvexLatticePolygon& p, const PrimitiveDirection& u) {
    Int c1 = count_with_membership(p.lattice_points(1), u);
    return width_conclusion(c1, integer_width(p, u));
}

ConvexLatticePolygon cup(const ConvexLatticePolygon& a, const ConvexLatticePolygon& b) {
    std::vector<LatticePoint> pts = a.vertices();
    pts.insert(pts.end(), b.vertices().begin(), b.vertices().end());
    return ConvexLatticePolygon::hull_of(PointSet::from(std::move(pts)));
}

namespace {

// Exact rational point xn/den, yn/den with den > 0 and gcd(xn, yn, den) = 1.
struct RatPoint {
    Int xn = 0;
    Int yn = 0;
    Int den = 1;

    friend bool operator==(const RatPoint&, const RatPoint&) = default;

    void reduce() {
        Int g = std::gcd(gcd_abs(xn, yn), checked_abs(den));
        if (g > 1) {
            xn /= g;
            yn /= g;
            den /= g;
        }
    }
};

bool rat_lex_less(const RatPoint& p, const RatPoint& q) {
    Int lhs = checked_mul(p.xn, q.den);
    Int rhs = checked_mul(q.xn, p.den);
    if (lhs != rhs) return lhs < rhs;
    return checked_mul(p.yn, q.den) < checked_mul(q.yn, p.den);
}

int rat_orient_sign(const RatPoint& o, const RatPoint& a, const RatPoint& b) {
    // a - o as a rational vector over denominator a.den * o.den, similarly b.
    Int ax = checked_sub(checked_mul(a.xn, o.den), checked_mul(o.xn, a.den));
    Int ay = checked_sub(checked_mul(a.yn, o.den), checked_mul(o.yn, a.den));
    Int bx = checked_sub(checked_mul(b.xn, o.den), checked_mul(o.xn, b.den));
    Int by = checked_sub(checked_mul(b.yn, o.den), checked_mul(o.yn, b.den));
    // positive common scaling per row keeps the sign of the determinant
    if (Int g = gcd_abs(ax, ay); g > 1) {
        ax /= g;
        ay /= g;
    }
    if (Int g = gcd_abs(bx, by); g > 1) {
        bx /= g;
        by /= g;
    }
    Int det = checked_sub(checked_mul(ax, by), checked_mul(ay, bx));
    return det > 0 ? 1 : det < 0 ? -1 : 0;
}

std::vector<RatPoint> rat_hull(std::vector<RatPoint> pts) {
    std::sort(pts.begin(), pts.end(), rat_lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<RatPoint> lower;
    for (const auto& p : pts) {
        while (lower.size() >= 2 && rat_orient_sign(lower[lower.size() - 2], lower.back(), p) <= 0)
            lower.pop_back();
        lower.push_back(p);
    }
    std::vector<RatPoint> upper;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (upper.size() >= 2 && rat_orient_sign(upper[upper.size() - 2], upper.back(), *it) <= 0)
            upper.pop_back();
        upper.push_back(*it);
    }
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

}  // namespace

ConvexLatticePolygon reconstruct_from_widths(std::span<const WidthEntry> entries) {
    for (const auto& e : entries)
        if (e.width <= 0) throw std::invalid_argument("widths must be positive");
    std::vector<PrimitiveDirection> dirs;
    for (const auto& e : entries) dirs.push_back(e.direction);
    std::sort(dirs.begin(), dirs.end());
    if (std::adjacent_find(dirs.begin(), dirs.end()) != dirs.end())
        throw std::invalid_argument("duplicate width direction");
    if (entries.size() < 2)
        throw UnboundedError("fewer than two independent width directions");

    // The region is the intersection of the slabs |2*(a*y - b*x)| <= W; its
    // vertices lie on intersections of two slab boundary lines
    // 2*(a*y - b*x) = +-W, solved exactly by Cramer's rule.
    std::vector<RatPoint> candidates;
    const auto n = entries.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& ui = entries[i].direction;
            const auto& uj = entries[j].direction;
            // rows (-2b, 2a | s*W); determinant 4*cross(ui, uj) is nonzero
            // because distinct canonical directions are never parallel
            Int a11 = checked_mul(-2, ui.b()), a12 = checked_mul(2, ui.a());
            Int a21 = checked_mul(-2, uj.b()), a22 = checked_mul(2, uj.a());
            Int det = checked_sub(checked_mul(a11, a22), checked_mul(a12, a21));
            for (Int si : {Int{1}, Int{-1}}) {
                for (Int sj : {Int{1}, Int{-1}}) {
                    Int c1 = checked_mul(si, entries[i].width);
                    Int c2 = checked_mul(sj, entries[j].width);
                    RatPoint pt;
                    pt.xn = checked_sub(checked_mul(c1, a22), checked_mul(c2, a12));
                    pt.yn = checked_sub(checked_mul(a11, c2), checked_mul(a21, c1));
                    pt.den = det;
                    if (pt.den < 0) {
                        pt.xn = checked_neg(pt.xn);
                        pt.yn = checked_neg(pt.yn);
                        pt.den = checked_neg(pt.den);
                    }
                    pt.reduce();
                    bool feasible = true;
                    for (std::size_t k = 0; k < n && feasible; ++k) {
                        const auto& uk = entries[k].direction;
                        Int form = checked_mul(
                            2, checked_sub(checked_mul(uk.a(), pt.yn), checked_mul(uk.b(), pt.xn)));
                        feasible = checked_abs(form) <= checked_mul(entries[k].width, pt.den);
                    }
                    if (feasible) candidates.push_back(pt);
                }
            }
        }
    }

    auto hull = rat_hull(std::move(candidates));
    std::vector<LatticePoint> verts;
    verts.reserve(hull.size());
    for (const auto& pt : hull) {
        if (pt.den != 1)
            throw NonIntegerVertexError("vertex (" + std::to_string(pt.xn) + "/" +
                                        std::to_string(pt.den) + ", " + std::to_string(pt.yn) +
                                        "/" + std::to_string(pt.den) + ") is not integral");
        verts.push_back({pt.xn, pt.yn});
    }
    return ConvexLatticePolygon::from_vertices(std::move(verts));
}

namespace {

// Lexicographically first direction whose effective projection counts differ;
// when only the totals differ, the first direction (1, t) outside both
// supports is used, which any off-support direction separates.
std::optional<PrimitiveDirection> first_mismatch_direction(const ProjectionSignature& a,
                                                           const ProjectionSignature& b) {
    auto ia = a.counts.begin();
    auto ib = b.counts.begin();
    while (ia != a.counts.end() || ib != b.counts.end()) {
        PrimitiveDirection u = primitive(1, 0);
        Int ca, cb;
        if (ib == b.counts.end() || (ia != a.counts.end() && ia->first < ib->first)) {
            u = ia->first;
            ca = ia->second;
            cb = b.total;
            ++ia;
        } else if (ia == a.counts.end() || ib->first < ia->first) {
            u = ib->first;
            ca = a.total;
            cb = ib->second;
            ++ib;
        } else {
            u = ia->first;
            ca = ia->second;
            cb = ib->second;
            ++ia;
            ++ib;
        }
        if (ca != cb) return u;
    }
    if (a.total != b.total) {
        for (Int t = 0;; ++t) {
            PrimitiveDirection u = primitive(1, t);
            if (!a.counts.contains(u) && !b.counts.contains(u)) return u;
        }
    }
    return std::nullopt;
}

}  // namespace

UniquenessVerdict uniqueness_check(const ConvexLatticePolygon& k, const ConvexLatticePolygon& l) {
    UniquenessVerdict v;
    v.equal_polygons = (k == l);
    auto k1 = signature_of_polygon(k, 1);
    auto l1 = signature_of_polygon(l, 1);
    v.first_signature_match = signatures_equal(k1, l1);
    auto k2 = signature_of_polygon(k, 2);
    auto l2 = signature_of_polygon(l, 2);
    v.dilate_signature_match = signatures_equal(k2, l2);
    if (!v.first_signature_match)
        v.witness_direction = first_mismatch_direction(k1, l1);
    else if (!v.dilate_signature_match)
        v.witness_direction = first_mismatch_direction(k2, l2);
    return v;
}

namespace {

struct ShardSweep {
    Int polygons = 0;
    Int checks = 0;
    Int hypothesis_hits = 0;
    std::vector<CheckRecord> failures;
};

SweepReport merge_sweeps(std::string kind, const EnumerationSpec& spec,
                         std::vector<ShardSweep> parts) {
    SweepReport rep;
    rep.kind = std::move(kind);
    rep.radius = spec.radius;
    for (auto& part : parts) {
        rep.polygons = checked_add(rep.polygons, part.polygons);
        rep.checks = checked_add(rep.checks, part.checks);
        rep.hypothesis_hits = checked_add(rep.hypothesis_hits, part.hypothesis_hits);
        for (auto& f : part.failures) rep.failures.push_back(std::move(f));
    }
    return rep;
}

}  // namespace

SweepReport run_edge_formula_sweep(const EnumerationSpec& spec, int workers) {
    auto shards = enumeration_shards(spec);
    auto parts = map_shards<ShardSweep>(
        shards, resolve_worker_count(workers), [&](const Shard& shard) {
            ShardSweep part;
            enumerate_shard(spec, shard, [&](const ConvexLatticePolygon& p) {
                ++part.polygons;
                PointSet pts = p.lattice_points(1);
                for (const auto& u : edge_directions(p)) {
                    bool holds = edge_formula_count(p, u) == projection_count(pts, u);
                    ++part.checks;
                    if (!holds) part.failures.push_back({"thm32", p, u, false});
                }
            });
            return part;
        });
    return merge_sweeps("check-thm32", spec, std::move(parts));
}

SweepReport run_lemma35_sweep(const EnumerationSpec& spec, int workers) {
    auto shards = enumeration_shards(spec);
    auto parts = map_shards<ShardSweep>(
        shards, resolve_worker_count(workers), [&](const Shard& shard) {
            ShardSweep part;
            enumerate_shard(spec, shard, [&](const ConvexLatticePolygon& p) {
                ++part.polygons;
                PointSet pts1 = p.lattice_points(1);
                PointSet pts2 = p.lattice_points(2);
                for (const auto& u : difference_directions(pts1)) {
                    ++part.checks;
                    Int c1 = projection_count(pts1, u);
                    Int c2 = projection_count(pts2, u);
                    if (!doubling_hypothesis(c1, c2)) continue;
                    ++part.hypothesis_hits;
                    if (!width_conclusion(c1, integer_width(p, u)))
                        part.failures.push_back({"lemma35", p, u, false});
                }
            });
            return part;
        });
    return merge_sweeps("check-lemma35", spec, std::move(parts));
}

}  // namespace lxray
