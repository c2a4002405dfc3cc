#include "lxray/projection.hpp"

#include <algorithm>
#include <vector>

namespace lxray {

namespace {

std::vector<Int> form_values(const PointSet& s, const PrimitiveDirection& u) {
    if (s.empty()) throw EmptySetError("empty point set");
    std::vector<Int> vals;
    vals.reserve(s.size());
    for (const auto& p : s.points()) vals.push_back(line_value(u, p));
    return vals;
}

}  // namespace

Int projection_count(const PointSet& s, const PrimitiveDirection& u) {
    auto vals = form_values(s, u);
    std::sort(vals.begin(), vals.end());
    return static_cast<Int>(std::unique(vals.begin(), vals.end()) - vals.begin());
}

Int integer_width(const PointSet& s, const PrimitiveDirection& u) {
    auto vals = form_values(s, u);
    auto [lo, hi] = std::minmax_element(vals.begin(), vals.end());
    return checked_sub(*hi, *lo);
}

Int integer_width(const ConvexLatticePolygon& p, const PrimitiveDirection& u) {
    return integer_width(PointSet::from(p.vertices()), u);
}

Int support_value(const ConvexLatticePolygon& p, const LatticePoint& v) {
    if (v.x == 0 && v.y == 0) throw ZeroVectorError("support direction is the zero vector");
    Int best = 0;
    bool first = true;
    for (const auto& q : p.vertices()) {
        Int val = checked_add(checked_mul(v.x, q.x), checked_mul(v.y, q.y));
        if (first || val > best) best = val;
        first = false;
    }
    return best;
}

namespace {

ProjectionSignature signature_of_points(const PointSet& pts) {
    ProjectionSignature sig;
    sig.total = static_cast<Int>(pts.size());
    for (const auto& u : difference_directions(pts))
        sig.counts.emplace(u, projection_count(pts, u));
    return sig;
}

}  // namespace

ProjectionSignature signature(const PointSet& s, Int dilation) {
    if (s.empty()) throw EmptySetError("empty point set");
    if (dilation < 1) throw std::invalid_argument("dilation must be >= 1");
    if (!is_convex_lattice_set(s))
        throw NotConvexLatticeSetError("point set is not a convex lattice set");
    if (dilation == 1) return signature_of_points(s);
    return signature_of_points(lattice_points_in_hull(convex_hull(s), dilation));
}

ProjectionSignature signature_of_polygon(const ConvexLatticePolygon& p, Int dilation) {
    return signature_of_points(p.lattice_points(dilation));
}

bool signatures_equal(const ProjectionSignature& a, const ProjectionSignature& b) {
    if (a.total != b.total) return false;
    // Walk the union of supports; a direction missing from one signature has
    // projection count equal to that signature's total.
    auto ia = a.counts.begin();
    auto ib = b.counts.begin();
    while (ia != a.counts.end() || ib != b.counts.end()) {
        Int ca, cb;
        if (ib == b.counts.end() || (ia != a.counts.end() && ia->first < ib->first)) {
            ca = ia->second;
            cb = b.total;
            ++ia;
        } else if (ia == a.counts.end() || ib->first < ia->first) {
            ca = a.total;
            cb = ib->second;
            ++ib;
        } else {
            ca = ia->second;
            cb = ib->second;
            ++ia;
            ++ib;
        }
        if (ca != cb) return false;
    }
    return true;
}

std::string signature_key(const ProjectionSignature& sig) {
    std::string key = std::to_string(sig.total) + ";";
    bool first = true;
    for (const auto& [u, c] : sig.counts) {
        if (!first) key += ";";
        key += std::to_string(u.a()) + "," + std::to_string(u.b()) + ":" + std::to_string(c);
        first = false;
    }
    return key;
}

}  // namespace lxray
