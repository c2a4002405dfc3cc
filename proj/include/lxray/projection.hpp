#pragma once

// Discrete projections. Two lattice points p, q project to the same point of
// the line u-perp exactly when p - q is parallel to u = (a,b), i.e. when the
// linear form a*y - b*x agrees on them. Projection counts are therefore the
// number of distinct form values, and the integer width
//   W(s, u) = max - min of the form over s
// carries the geometric width of the projection scaled by |u|, so all
// quantities stay integers.

#include <map>
#include <string>

#include "lxray/lattice_core.hpp"

namespace lxray {

// Number of distinct lines parallel to u meeting s. Throws EmptySetError.
Int projection_count(const PointSet& s, const PrimitiveDirection& u);

// max - min of a*y - b*x over s. 0 exactly when s lies on one line
// parallel to u. Throws EmptySetError.
Int integer_width(const PointSet& s, const PrimitiveDirection& u);

// Width of the polygon body equals the width of its vertex set.
Int integer_width(const ConvexLatticePolygon& p, const PrimitiveDirection& u);

// Support value max over vertices of <v, x>; v need not be primitive but
// must be nonzero (ZeroVectorError).
Int support_value(const ConvexLatticePolygon& p, const LatticePoint& v);

// Finite summary of all nontrivial projections of a convex lattice set:
// the point count plus, for every direction u realized by a difference of
// two points of the set, the projection count in direction u. For every
// direction outside that support, the projection count equals total, so the
// signature determines the count in every direction.
struct ProjectionSignature {
    Int total = 0;
    std::map<PrimitiveDirection, Int> counts;

    friend bool operator==(const ProjectionSignature&, const ProjectionSignature&) = default;
};

// Signature of the convex lattice set s, optionally of the dilated body
// conv(s) * dilation. Validates that s is a convex lattice set
// (NotConvexLatticeSetError) and dilation >= 1.
ProjectionSignature signature(const PointSet& s, Int dilation = 1);

// Same, for a polygon's lattice points; skips the set validation since the
// points of a polygon are convex by construction.
ProjectionSignature signature_of_polygon(const ConvexLatticePolygon& p, Int dilation = 1);

// Semantic equality: equal totals and equal projection counts in every
// direction, with directions missing from a signature's support defaulting
// to its total.
bool signatures_equal(const ProjectionSignature& a, const ProjectionSignature& b);

// Canonical text form "total;a1,b1:c1;a2,b2:c2;..." with keys in
// lexicographic direction order; a singleton set yields "1;".
std::string signature_key(const ProjectionSignature& sig);

}  // namespace lxray
