#include "lxray/lattice_core.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace lxray {

Int orient2(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return cross(a - o, b - o);
}

Int cross(const LatticePoint& u, const LatticePoint& v) {
    return checked_sub(checked_mul(u.x, v.y), checked_mul(u.y, v.x));
}

PrimitiveDirection::PrimitiveDirection(Int a, Int b) {
    if (a == 0 && b == 0) throw ZeroVectorError("zero vector has no direction");
    Int g = gcd_abs(a, b);
    a /= g;
    b /= g;
    if (b < 0 || (b == 0 && a < 0)) {
        a = -a;
        b = -b;
    }
    a_ = a;
    b_ = b;
}

Int line_value(const PrimitiveDirection& u, const LatticePoint& p) {
    return checked_sub(checked_mul(u.a(), p.y), checked_mul(u.b(), p.x));
}

PointSet PointSet::from(std::vector<LatticePoint> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    PointSet s;
    s.points_ = std::move(points);
    return s;
}

bool PointSet::contains(const LatticePoint& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

std::vector<LatticePoint> convex_hull(const PointSet& s) {
    if (s.empty()) throw EmptySetError("convex hull of the empty set");
    const auto& pts = s.points();  // already sorted, unique
    if (pts.size() == 1) return {pts[0]};

    // Monotone chain; popping on orient2 <= 0 keeps extreme points only.
    std::vector<LatticePoint> lower;
    for (const auto& p : pts) {
        while (lower.size() >= 2 && orient2(lower[lower.size() - 2], lower.back(), p) <= 0)
            lower.pop_back();
        lower.push_back(p);
    }
    std::vector<LatticePoint> upper;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (upper.size() >= 2 && orient2(upper[upper.size() - 2], upper.back(), *it) <= 0)
            upper.pop_back();
        upper.push_back(*it);
    }
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;  // CCW, starts at the lexicographic minimum
}

bool is_origin_symmetric(const PointSet& s) {
    if (s.empty()) throw EmptySetError("empty point set");
    for (const auto& p : s.points())
        if (!s.contains(-p)) return false;
    return true;
}

namespace {

// Lattice points on the closed segment [p, q], p != q.
void append_segment_points(const LatticePoint& p, const LatticePoint& q,
                           std::vector<LatticePoint>& out) {
    LatticePoint d = q - p;
    Int g = gcd_abs(d.x, d.y);
    LatticePoint step{d.x / g, d.y / g};
    LatticePoint cur = p;
    for (Int i = 0; i <= g; ++i) {
        out.push_back(cur);
        if (i < g) cur = cur + step;
    }
}

}  // namespace

PointSet lattice_points_in_hull(std::span<const LatticePoint> hull, Int dilation) {
    if (hull.empty()) throw EmptySetError("empty hull");
    if (dilation < 1) throw std::invalid_argument("dilation must be >= 1");

    std::vector<LatticePoint> verts;
    verts.reserve(hull.size());
    for (const auto& v : hull) verts.push_back(v * dilation);

    if (verts.size() == 1) return PointSet::from(std::move(verts));
    if (verts.size() == 2) {
        std::vector<LatticePoint> out;
        append_segment_points(verts[0], verts[1], out);
        return PointSet::from(std::move(out));
    }

    Int ymin = verts[0].y, ymax = verts[0].y, xmin = verts[0].x, xmax = verts[0].x;
    for (const auto& v : verts) {
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
    }

    // Row scan. For the CCW edge A -> B with d = B - A, the interior lies
    // left of the edge: cross(d, p - A) >= 0, i.e. d.y * x <= d.x * (y - A.y)
    // + d.y * A.x, which bounds x above (d.y > 0), below (d.y < 0), or is an
    // x-free row feasibility test (d.y = 0).
    std::vector<LatticePoint> out;
    const std::size_t n = verts.size();
    for (Int y = ymin; y <= ymax; ++y) {
        Int lo = xmin, hi = xmax;
        bool feasible = true;
        for (std::size_t i = 0; i < n && feasible; ++i) {
            const LatticePoint& a = verts[i];
            const LatticePoint d = verts[(i + 1) % n] - a;
            Int rhs = checked_add(checked_mul(d.x, checked_sub(y, a.y)), checked_mul(d.y, a.x));
            if (d.y > 0) {
                hi = std::min(hi, floor_div(rhs, d.y));
            } else if (d.y < 0) {
                lo = std::max(lo, ceil_div(rhs, d.y));
            } else {
                feasible = rhs >= 0;
            }
        }
        if (!feasible) continue;
        for (Int x = lo; x <= hi; ++x) out.push_back({x, y});
    }
    return PointSet::from(std::move(out));
}

bool is_convex_lattice_set(const PointSet& s) {
    auto hull = convex_hull(s);  // throws EmptySetError for the empty set
    return lattice_points_in_hull(hull, 1) == s;
}

ConvexLatticePolygon ConvexLatticePolygon::from_vertices(std::vector<LatticePoint> vertices) {
    auto given = PointSet::from(vertices);
    if (given.size() != vertices.size())
        throw InvalidPolygonError("duplicate vertices");
    auto hull = convex_hull(given);
    if (hull.size() < 3)
        throw InvalidPolygonError("polygon is not full-dimensional");
    if (hull.size() != given.size())
        throw InvalidPolygonError("vertex list contains non-extreme points");
    if (!is_origin_symmetric(given))
        throw InvalidPolygonError("polygon is not origin-symmetric");
    ConvexLatticePolygon p;
    p.verts_ = std::move(hull);
    return p;
}

ConvexLatticePolygon ConvexLatticePolygon::hull_of(const PointSet& s) {
    auto hull = convex_hull(s);
    if (hull.size() < 3)
        throw InvalidPolygonError("hull is not full-dimensional");
    auto hull_set = PointSet::from(hull);
    if (!is_origin_symmetric(hull_set))
        throw InvalidPolygonError("hull is not origin-symmetric");
    ConvexLatticePolygon p;
    p.verts_ = std::move(hull);
    return p;
}

PointSet ConvexLatticePolygon::lattice_points(Int dilation) const {
    return lattice_points_in_hull(verts_, dilation);
}

std::vector<PrimitiveDirection> difference_directions(const PointSet& s) {
    if (s.empty()) throw EmptySetError("empty point set");
    const auto& pts = s.points();
    std::set<PrimitiveDirection> dirs;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            dirs.insert(primitive(pts[j] - pts[i]));
    return {dirs.begin(), dirs.end()};
}

std::vector<PrimitiveDirection> edge_directions(const ConvexLatticePolygon& p) {
    const auto& v = p.vertices();
    std::set<PrimitiveDirection> dirs;
    for (std::size_t i = 0; i < v.size(); ++i)
        dirs.insert(primitive(v[(i + 1) % v.size()] - v[i]));
    return {dirs.begin(), dirs.end()};
}

Int pick_area2(const ConvexLatticePolygon& p) {
    const auto& v = p.vertices();
    Int acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        acc = checked_add(acc, cross(v[i], v[(i + 1) % v.size()]));
    return acc;  // positive: vertices are CCW
}

Int boundary_lattice_count(const ConvexLatticePolygon& p) {
    const auto& v = p.vertices();
    Int acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        LatticePoint d = v[(i + 1) % v.size()] - v[i];
        acc = checked_add(acc, gcd_abs(d.x, d.y));
    }
    return acc;
}

bool pick_identity_holds(const ConvexLatticePolygon& p) {
    Int interior_doubled = checked_mul(2, static_cast<Int>(p.lattice_points(1).size()));
    Int rhs = checked_sub(checked_sub(interior_doubled, boundary_lattice_count(p)), 2);
    return pick_area2(p) == rhs;
}

}  // namespace lxray
