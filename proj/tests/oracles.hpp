#pragma once

// Independent reference implementations used only by the test suite. Each
// deliberately uses a different algorithm from the library: projection counts
// group points pairwise instead of sorting form values, lattice points come
// from a bounding-box membership scan instead of a row scan, hull membership
// uses triangle decomposition instead of monotone chains, areas use the
// trapezoid shoelace form, and the polygon universe comes from brute-force
// subset enumeration instead of edge-vector construction.

#include <set>
#include <vector>

#include "lxray/lattice_core.hpp"

namespace oracle {

using lxray::ConvexLatticePolygon;
using lxray::Int;
using lxray::LatticePoint;
using lxray::PointSet;
using lxray::PrimitiveDirection;

// Number of parallel-to-u classes, by pairwise collinearity grouping.
Int projection_count(const std::vector<LatticePoint>& pts, const PrimitiveDirection& u);

// z in conv(pts), decided by scanning all points, segments and triangles.
bool in_hull(const LatticePoint& z, const std::vector<LatticePoint>& pts);

// Lattice points of conv(verts) scaled by dilation, by box scan + in_hull.
std::vector<LatticePoint> lattice_points(const std::vector<LatticePoint>& verts, Int dilation);

// s equals the lattice points of its own hull (box scan + in_hull).
bool is_convex_lattice_set(const std::vector<LatticePoint>& pts);

// Extreme points of pts: p is extreme iff p is not in conv(pts \ {p}).
std::vector<LatticePoint> extreme_points(const std::vector<LatticePoint>& pts);

// Twice the polygon area by the trapezoid form sum (x_i - x_{i+1})(y_i + y_{i+1}).
Int area2_trapezoid(const std::vector<LatticePoint>& ccw_verts);

// Number of points of pts on the boundary of conv(verts).
Int boundary_count(const std::vector<LatticePoint>& verts, const std::vector<LatticePoint>& pts);

// Every origin-symmetric full-dimensional convex lattice set inside [-R,R]^2,
// found by brute force over origin-symmetric subsets; returns the set of
// vertex sets (each sorted lexicographically).
std::set<std::vector<LatticePoint>> symmetric_polygon_vertex_sets(Int radius);

}  // namespace oracle
