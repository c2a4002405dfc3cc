#pragma once

// Closed-form identities for projection counts of origin-symmetric convex
// lattice polygons, the convex-union operator, reconstruction from integer
// widths, and the two-dilation uniqueness check, plus the exhaustive sweeps
// that verify the identities over an enumerated universe.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lxray/projection.hpp"
#include "lxray/search.hpp"

namespace lxray {

// Closed form for the projection count of a polygon's lattice points in an
// edge direction: integer_width(p, u) + 1. Requires u to be an edge
// direction of p (NotAnEdgeDirectionError).
Int edge_formula_count(const ConvexLatticePolygon& p, const PrimitiveDirection& u);

// Doubling hypothesis: with c1 = projection count of p and c2 = projection
// count of 2p in direction u, tests 2*(c1 - 1) = c2 - 1. Requires u to be a
// difference direction of p's lattice points (DirectionNotInD1Error).
bool lemma35_applies(const ConvexLatticePolygon& p, const PrimitiveDirection& u);

// Conclusion under the doubling hypothesis: c1 = integer_width(p, u) + 1.
// Same precondition on u.
bool lemma35_conclusion_holds(const ConvexLatticePolygon& p, const PrimitiveDirection& u);

// Convex union: the hull of the union of two polygons. Always again an
// origin-symmetric convex lattice polygon.
ConvexLatticePolygon cup(const ConvexLatticePolygon& a, const ConvexLatticePolygon& b);

struct WidthEntry {
    PrimitiveDirection direction;
    Int width = 0;

    friend bool operator==(const WidthEntry&, const WidthEntry&) = default;
};

// The maximal origin-symmetric convex body with the given integer widths,
// i.e. the intersection of the slabs 2*|a*y - b*x| <= W. Requires distinct
// directions and positive widths (std::invalid_argument), at least two
// directions (UnboundedError), and integral vertices (NonIntegerVertexError).
ConvexLatticePolygon reconstruct_from_widths(std::span<const WidthEntry> entries);

struct UniquenessVerdict {
    bool equal_polygons = false;
    bool first_signature_match = false;
    bool dilate_signature_match = false;
    // lexicographically first direction whose projection counts separate the
    // two polygons (from the dilated signatures when the first ones agree);
    // empty when both signatures match
    std::optional<PrimitiveDirection> witness_direction;

    // distinct polygons with matching signatures at both dilations
    bool theorem_violation() const {
        return first_signature_match && dilate_signature_match && !equal_polygons;
    }
};

UniquenessVerdict uniqueness_check(const ConvexLatticePolygon& k, const ConvexLatticePolygon& l);

// One (polygon, direction) identity check inside a sweep.
struct CheckRecord {
    std::string kind;
    ConvexLatticePolygon polygon;
    PrimitiveDirection direction;
    bool holds = false;

    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct SweepReport {
    std::string kind;
    Int radius = 0;
    Int polygons = 0;
    Int checks = 0;
    Int hypothesis_hits = 0;  // lemma sweep only: checks whose hypothesis held
    std::vector<CheckRecord> failures;

    bool ok() const { return failures.empty(); }

    friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

// For every enumerated polygon and every edge direction: the closed form
// equals the directly computed projection count.
SweepReport run_edge_formula_sweep(const EnumerationSpec& spec, int workers = 0);

// For every enumerated polygon and every difference direction: whenever the
// doubling hypothesis holds, the width conclusion holds.
SweepReport run_lemma35_sweep(const EnumerationSpec& spec, int workers = 0);

}  // namespace lxray
