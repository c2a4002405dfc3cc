#include <doctest.h>

#include <array>
#include <vector>

#include "lxray/theorems.hpp"
#include "oracles.hpp"

using namespace lxray;

namespace {

ConvexLatticePolygon square() {
    return ConvexLatticePolygon::from_vertices({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
}

ConvexLatticePolygon diamond() {
    return ConvexLatticePolygon::from_vertices({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
}

ConvexLatticePolygon hexagon() {
    return ConvexLatticePolygon::from_vertices({{2, 0}, {1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1}});
}

ConvexLatticePolygon scaled(const ConvexLatticePolygon& p, Int k) {
    std::vector<LatticePoint> v;
    for (const auto& q : p.vertices()) v.push_back(q * k);
    return ConvexLatticePolygon::from_vertices(v);
}

// a parallelogram with edge directions (1,1) and (2,1)
ConvexLatticePolygon pgram() {
    return ConvexLatticePolygon::from_vertices({{-3, -2}, {1, 0}, {3, 2}, {-1, 0}});
}

// a parallelogram with edge directions (1,0) and (1,1)
ConvexLatticePolygon pgram2() {
    return ConvexLatticePolygon::from_vertices({{-2, -1}, {0, -1}, {2, 1}, {0, 1}});
}

}  // namespace

TEST_CASE("edge formula equals width plus one on edge directions") {
    CHECK(edge_formula_count(square(), primitive(1, 0)) == 3);
    CHECK(edge_formula_count(square(), primitive(0, 1)) == 3);
    CHECK(edge_formula_count(hexagon(), primitive(1, 0)) == 3);
    CHECK(edge_formula_count(hexagon(), primitive(1, 1)) == 5);
    CHECK(edge_formula_count(hexagon(), primitive(-1, 1)) == 5);
    CHECK(edge_formula_count(diamond(), primitive(1, 1)) == 3);
    CHECK(edge_formula_count(pgram(), primitive(1, 1)) == 3);
    CHECK(edge_formula_count(pgram(), primitive(2, 1)) == 3);
    CHECK(edge_formula_count(pgram2(), primitive(1, 0)) == 3);
    CHECK(edge_formula_count(pgram2(), primitive(1, 1)) == 3);
}

TEST_CASE("edge formula agrees with the direct projection count") {
    for (const auto& p : {square(), diamond(), hexagon(), pgram(), pgram2(), scaled(square(), 3)}) {
        auto points = p.lattice_points(1);
        for (const auto& u : edge_directions(p)) {
            CHECK(edge_formula_count(p, u) == projection_count(points, u));
            CHECK(edge_formula_count(p, u) == oracle::projection_count(points.points(), u));
        }
    }
}

TEST_CASE("edge formula rejects non-edge directions") {
    CHECK_THROWS_AS(edge_formula_count(square(), primitive(1, 1)), NotAnEdgeDirectionError);
    CHECK_THROWS_AS(edge_formula_count(diamond(), primitive(1, 0)), NotAnEdgeDirectionError);
    CHECK_THROWS_AS(edge_formula_count(pgram(), primitive(1, 0)), NotAnEdgeDirectionError);
}

TEST_CASE("doubling hypothesis and conclusion on known cases") {
    CHECK(lemma35_applies(square(), primitive(1, 0)));
    CHECK(lemma35_conclusion_holds(square(), primitive(1, 0)));
    CHECK(lemma35_applies(square(), primitive(1, 1)));
    CHECK(lemma35_conclusion_holds(square(), primitive(1, 1)));
    CHECK(lemma35_applies(square(), primitive(2, 1)));
    CHECK(lemma35_conclusion_holds(square(), primitive(2, 1)));
    CHECK(lemma35_applies(diamond(), primitive(1, 0)));
    CHECK(lemma35_conclusion_holds(diamond(), primitive(1, 0)));
    CHECK(lemma35_applies(hexagon(), primitive(1, 1)));
    CHECK(lemma35_conclusion_holds(hexagon(), primitive(1, 1)));
}

TEST_CASE("lemma checks reject directions outside the difference set") {
    CHECK_THROWS_AS(lemma35_applies(diamond(), primitive(2, 1)), DirectionNotInD1Error);
    CHECK_THROWS_AS(lemma35_conclusion_holds(diamond(), primitive(2, 1)), DirectionNotInD1Error);
}

TEST_CASE("cup of known polygons") {
    CHECK(cup(diamond(), diamond()) == diamond());
    CHECK(cup(diamond(), square()) == square());
    CHECK(cup(square(), diamond()) == square());

    // the square's corners land on the doubled diamond's edges, so the cup
    // collapses back to the doubled diamond
    auto d2 = scaled(diamond(), 2);
    CHECK(cup(d2, square()) == d2);

    // a genuine octagon: corners of the doubled square poke out of the
    // tripled diamond
    auto oct = cup(scaled(diamond(), 3), scaled(square(), 2));
    CHECK(oct.vertex_count() == 8);
    CHECK(oct == ConvexLatticePolygon::from_vertices(
                     {{3, 0}, {2, 2}, {0, 3}, {-2, 2}, {-3, 0}, {-2, -2}, {0, -3}, {2, -2}}));
    auto want = oracle::extreme_points({{3, 0}, {0, 3}, {-3, 0}, {0, -3}, {2, 2}, {2, -2},
                                        {-2, 2}, {-2, -2}});
    auto got = oct.vertices();
    std::sort(got.begin(), got.end());
    CHECK(got == want);
}

TEST_CASE("cup support values satisfy the maximum identity") {
    std::array<ConvexLatticePolygon, 4> pool{square(), diamond(), hexagon(), pgram()};
    for (const auto& a : pool) {
        for (const auto& b : pool) {
            auto c = cup(a, b);
            for (Int vx = -3; vx <= 3; ++vx)
                for (Int vy = -3; vy <= 3; ++vy) {
                    if (vx == 0 && vy == 0) continue;
                    LatticePoint v{vx, vy};
                    CHECK(support_value(c, v) ==
                          std::max(support_value(a, v), support_value(b, v)));
                    auto u = primitive(v);
                    CHECK(integer_width(c, u) ==
                          std::max(integer_width(a, u), integer_width(b, u)));
                }
        }
    }
}

TEST_CASE("reconstruction from widths recovers known polygons") {
    std::vector<WidthEntry> sq{{primitive(1, 0), 2}, {primitive(0, 1), 2}};
    CHECK(reconstruct_from_widths(sq) == square());

    std::vector<WidthEntry> dm{{primitive(1, 1), 2}, {primitive(1, -1), 2}};
    CHECK(reconstruct_from_widths(dm) == diamond());

    std::vector<WidthEntry> hex{{primitive(-1, 1), 4}, {primitive(1, 0), 2}, {primitive(1, 1), 4}};
    CHECK(reconstruct_from_widths(hex) == hexagon());

    // an inactive slab must not change the result
    std::vector<WidthEntry> redundant{{primitive(1, 0), 2}, {primitive(0, 1), 2},
                                      {primitive(1, 1), 100}};
    CHECK(reconstruct_from_widths(redundant) == square());
}

TEST_CASE("reconstruction validates its input") {
    CHECK_THROWS_AS(reconstruct_from_widths(std::vector<WidthEntry>{}), UnboundedError);
    std::vector<WidthEntry> one{{primitive(1, 0), 2}};
    CHECK_THROWS_AS(reconstruct_from_widths(one), UnboundedError);
    std::vector<WidthEntry> dup{{primitive(1, 0), 2}, {primitive(-2, 0), 4}};
    CHECK_THROWS_AS(reconstruct_from_widths(dup), std::invalid_argument);
    std::vector<WidthEntry> zero{{primitive(1, 0), 0}, {primitive(0, 1), 2}};
    CHECK_THROWS_AS(reconstruct_from_widths(zero), std::invalid_argument);
    std::vector<WidthEntry> odd{{primitive(1, 0), 1}, {primitive(0, 1), 1}};
    CHECK_THROWS_AS(reconstruct_from_widths(odd), NonIntegerVertexError);
}

TEST_CASE("edge-width round trip over the full radius-2 universe") {
    auto all = enumerate_symmetric_polygons(EnumerationSpec{2, {}});
    REQUIRE(all.size() == 165);
    for (const auto& p : all) {
        std::vector<WidthEntry> entries;
        for (const auto& u : edge_directions(p)) entries.push_back({u, integer_width(p, u)});
        CHECK(reconstruct_from_widths(entries) == p);
    }
}

TEST_CASE("uniqueness check on equal and on separated polygons") {
    auto same = uniqueness_check(square(), square());
    CHECK(same.equal_polygons);
    CHECK(same.first_signature_match);
    CHECK(same.dilate_signature_match);
    CHECK(!same.witness_direction.has_value());
    CHECK(!same.theorem_violation());

    auto diff = uniqueness_check(square(), diamond());
    CHECK(!diff.equal_polygons);
    CHECK(!diff.first_signature_match);
    REQUIRE(diff.witness_direction.has_value());
    CHECK(*diff.witness_direction == primitive(-2, 1));
    CHECK(!diff.theorem_violation());
}

TEST_CASE("uniqueness check separates a dilation-1 collision pair at dilation 2") {
    // these two share their dilation-1 signature (discovered by the search)
    auto p1 = ConvexLatticePolygon::from_vertices({{-2, -2}, {1, -1}, {2, 2}, {-1, 1}});
    auto p2 = ConvexLatticePolygon::from_vertices({{-2, 0}, {-1, -2}, {2, 0}, {1, 2}});
    CHECK(signatures_equal(signature_of_polygon(p1, 1), signature_of_polygon(p2, 1)));

    auto v = uniqueness_check(p1, p2);
    CHECK(!v.equal_polygons);
    CHECK(v.first_signature_match);
    CHECK(!v.dilate_signature_match);
    REQUIRE(v.witness_direction.has_value());
    // the witness direction genuinely separates the dilated signatures
    auto s1 = signature_of_polygon(p1, 2);
    auto s2 = signature_of_polygon(p2, 2);
    auto count_of = [](const ProjectionSignature& s, const PrimitiveDirection& u) {
        auto it = s.counts.find(u);
        return it == s.counts.end() ? s.total : it->second;
    };
    CHECK(count_of(s1, *v.witness_direction) != count_of(s2, *v.witness_direction));
    CHECK(!v.theorem_violation());
}

TEST_CASE("theorem violation flag requires both matches and distinct polygons") {
    UniquenessVerdict v;
    v.equal_polygons = false;
    v.first_signature_match = true;
    v.dilate_signature_match = true;
    CHECK(v.theorem_violation());
    v.equal_polygons = true;
    CHECK(!v.theorem_violation());
    v.equal_polygons = false;
    v.dilate_signature_match = false;
    CHECK(!v.theorem_violation());
}

TEST_CASE("edge formula sweep is clean and deterministic at radius 2") {
    auto rep = run_edge_formula_sweep(EnumerationSpec{2, {}}, 1);
    CHECK(rep.kind == "check-thm32");
    CHECK(rep.radius == 2);
    CHECK(rep.polygons == 165);
    CHECK(rep.checks > rep.polygons);  // every polygon has at least two edge directions
    CHECK(rep.ok());
    CHECK(run_edge_formula_sweep(EnumerationSpec{2, {}}, 3) == rep);
}

TEST_CASE("doubling sweep is clean and deterministic at radius 2") {
    auto rep = run_lemma35_sweep(EnumerationSpec{2, {}}, 1);
    CHECK(rep.kind == "check-lemma35");
    CHECK(rep.polygons == 165);
    CHECK(rep.checks >= rep.hypothesis_hits);
    CHECK(rep.hypothesis_hits > 0);
    CHECK(rep.ok());
    CHECK(run_lemma35_sweep(EnumerationSpec{2, {}}, 4) == rep);
}
