#pragma once

// Exact-integer primitives for planar lattice geometry: points, primitive
// directions, canonical point sets, origin-symmetric convex lattice polygons,
// convex hulls, lattice-point enumeration, difference/edge directions and the
// Pick identity.
//
// Conventions used throughout the library:
//   - A direction (a,b) is canonical when gcd(|a|,|b|) = 1 and either b > 0,
//     or b = 0 and a > 0. Exactly one of v, -v is canonical for nonzero v,
//     so canonical directions are in bijection with lattice lines through
//     the origin. Directions order lexicographically by (a,b).
//   - Point sets are kept sorted lexicographically by (x,y) with duplicates
//     removed, so structural equality is set equality.
//   - Polygon vertices are stored counterclockwise, strictly convex (no three
//     consecutive vertices collinear), starting at the lexicographically
//     smallest vertex. Only origin-symmetric full-dimensional polygons are
//     representable.

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "lxray/arith.hpp"
#include "lxray/errors.hpp"

namespace lxray {

struct LatticePoint {
    Int x = 0;
    Int y = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

    LatticePoint operator+(const LatticePoint& o) const {
        return {checked_add(x, o.x), checked_add(y, o.y)};
    }
    LatticePoint operator-(const LatticePoint& o) const {
        return {checked_sub(x, o.x), checked_sub(y, o.y)};
    }
    LatticePoint operator-() const { return {checked_neg(x), checked_neg(y)}; }
    LatticePoint operator*(Int k) const { return {checked_mul(x, k), checked_mul(y, k)}; }
};

// Twice the signed area of the triangle (o, a, b); positive iff the turn
// o -> a -> b is counterclockwise.
Int orient2(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b);

// cross(u, v) = u.x * v.y - u.y * v.x
Int cross(const LatticePoint& u, const LatticePoint& v);

class PrimitiveDirection {
  public:
    // Canonicalizes an arbitrary nonzero integer vector: divides by the gcd
    // and flips sign if needed. Throws ZeroVectorError on (0,0).
    PrimitiveDirection(Int a, Int b);

    Int a() const { return a_; }
    Int b() const { return b_; }
    LatticePoint vec() const { return {a_, b_}; }

    friend auto operator<=>(const PrimitiveDirection&, const PrimitiveDirection&) = default;

  private:
    Int a_ = 1;
    Int b_ = 0;
};

inline PrimitiveDirection primitive(Int a, Int b) { return PrimitiveDirection(a, b); }
inline PrimitiveDirection primitive(const LatticePoint& v) { return PrimitiveDirection(v.x, v.y); }

// Value of the linear form a*y - b*x for u = (a,b). Two points lie on the
// same line parallel to u exactly when the form agrees on them, so this is
// the exact-integer stand-in for orthogonal projection onto u-perp.
Int line_value(const PrimitiveDirection& u, const LatticePoint& p);

// A finite set of lattice points in canonical (sorted, duplicate-free) form.
class PointSet {
  public:
    PointSet() = default;

    // Sorts and deduplicates.
    static PointSet from(std::vector<LatticePoint> points);

    const std::vector<LatticePoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    bool contains(const LatticePoint& p) const;

    friend auto operator<=>(const PointSet&, const PointSet&) = default;

  private:
    std::vector<LatticePoint> points_;
};

// An origin-symmetric convex lattice polygon, i.e. the convex hull of a
// full-dimensional origin-symmetric convex lattice set. Construction
// validates strict convexity, origin symmetry and full dimension.
class ConvexLatticePolygon {
  public:
    // vertices must be exactly the extreme points of their own hull, in any
    // order; throws InvalidPolygonError otherwise (duplicates, collinear
    // extras, fewer than 4 points, not symmetric, not full-dimensional).
    static ConvexLatticePolygon from_vertices(std::vector<LatticePoint> vertices);

    // Hull of an arbitrary nonempty set; throws InvalidPolygonError if the
    // hull is degenerate or not origin-symmetric.
    static ConvexLatticePolygon hull_of(const PointSet& s);

    const std::vector<LatticePoint>& vertices() const { return verts_; }
    std::size_t vertex_count() const { return verts_.size(); }

    // All lattice points of the polygon dilated by an integer factor k >= 1.
    PointSet lattice_points(Int dilation = 1) const;

    friend auto operator<=>(const ConvexLatticePolygon&, const ConvexLatticePolygon&) = default;

  private:
    ConvexLatticePolygon() = default;
    std::vector<LatticePoint> verts_;
};

// Strict convex hull: extreme points only, counterclockwise, starting at the
// lexicographically smallest point. Degenerate inputs yield one point (all
// equal) or the two segment endpoints (all collinear). Throws EmptySetError
// on the empty set.
std::vector<LatticePoint> convex_hull(const PointSet& s);

// True when s equals the full set of lattice points of its own convex hull.
// Singletons and "solid" collinear runs count as (degenerate) convex lattice
// sets. Throws EmptySetError on the empty set.
bool is_convex_lattice_set(const PointSet& s);

// True when s = -s. Throws EmptySetError on the empty set.
bool is_origin_symmetric(const PointSet& s);

// Lattice points of (dilation * conv(hull)), where hull is a strict hull as
// produced by convex_hull (1 point, 2 points or a CCW polygon). dilation >= 1.
PointSet lattice_points_in_hull(std::span<const LatticePoint> hull, Int dilation);

// All canonical directions of nonzero differences p - q with p, q in s,
// sorted lexicographically. Empty for singletons. Throws EmptySetError.
std::vector<PrimitiveDirection> difference_directions(const PointSet& s);

// Canonical directions of the polygon's edges, sorted lexicographically.
// An origin-symmetric polygon's edges come in opposite pairs, so each
// direction appears once.
std::vector<PrimitiveDirection> edge_directions(const ConvexLatticePolygon& p);

// Twice the area of the polygon (shoelace sum; always a positive integer).
Int pick_area2(const ConvexLatticePolygon& p);

// Number of lattice points on the polygon's boundary.
Int boundary_lattice_count(const ConvexLatticePolygon& p);

// Checks 2*A = 2*I + B - 2 in the doubled form
// pick_area2 = 2*|lattice_points| - boundary_lattice_count - 2.
bool pick_identity_holds(const ConvexLatticePolygon& p);

}  // namespace lxray
