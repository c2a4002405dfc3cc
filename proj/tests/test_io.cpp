#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "lxray/io.hpp"

using namespace lxray;

namespace {

ConvexLatticePolygon square() {
    return ConvexLatticePolygon::from_vertices({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
}

ConvexLatticePolygon diamond() {
    return ConvexLatticePolygon::from_vertices({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
}

// A scratch file that removes itself; tests never leave droppings behind.
struct TempFile {
    std::string path;

    explicit TempFile(const std::string& name, const std::string& contents = "")
        : path("lxray_test_" + name) {
        if (!contents.empty()) {
            std::ofstream out(path, std::ios::trunc);
            out << contents;
        }
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("point sets and polygons round-trip through json") {
    PointSet s = PointSet::from({{1, 0}, {-1, 0}, {0, 0}});
    CHECK(point_set_from_json(to_json(s), "t") == s);

    ConvexLatticePolygon p = square();
    CHECK(polygon_from_json(to_json(p), "t") == p);

    // a {"points": ...} polygon file is accepted and hulled
    Json pts = Json::parse(R"({"points": [[1,-1],[0,0],[-1,1],[1,1],[-1,-1]]})");
    CHECK(polygon_from_json(pts, "t") == p);
}

TEST_CASE("polygon json line is canonical and stable") {
    CHECK(polygon_json_line(square()) == R"({"polygon":[[-1,-1],[1,-1],[1,1],[-1,1]]})");
    CHECK(polygon_json_line(diamond()) == R"({"polygon":[[-1,0],[0,-1],[1,0],[0,1]]})");
}

TEST_CASE("malformed set files raise ParseError naming the field") {
    auto parse_set = [](const char* text) {
        return point_set_from_json(Json::parse(text), "f.json");
    };
    CHECK_THROWS_AS(parse_set(R"({"wrong": []})"), ParseError);
    CHECK_THROWS_AS(parse_set(R"({"points": []})"), ParseError);
    CHECK_THROWS_AS(parse_set(R"({"points": [[1]]})"), ParseError);
    CHECK_THROWS_AS(parse_set(R"({"points": [[1, 2, 3]]})"), ParseError);
    CHECK_THROWS_AS(parse_set(R"({"points": [[1.5, 0]]})"), ParseError);
    CHECK_THROWS_AS(parse_set(R"({"points": [["1", 0]]})"), ParseError);
    CHECK_THROWS_AS(parse_set(R"({"points": [[18446744073709551615, 0]]})"), ParseError);
    CHECK(parse_set(R"({"points": [[9223372036854775807, 0]]})").size() == 1);

    try {
        parse_set(R"({"points": [[0, 0], [1.5, 0]]})");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("points[1]") != std::string::npos);
    }
}

TEST_CASE("invalid polygon files raise InvalidPolygonError with context") {
    auto parse_poly = [](const char* text) {
        return polygon_from_json(Json::parse(text), "f.json");
    };
    // not origin-symmetric
    CHECK_THROWS_AS(parse_poly(R"({"polygon": [[0,0],[2,0],[0,2]]})"), InvalidPolygonError);
    // collinear midpoint listed as a vertex
    CHECK_THROWS_AS(parse_poly(R"({"polygon": [[-1,-1],[0,-1],[1,-1],[1,1],[-1,1]]})"),
                    InvalidPolygonError);
    try {
        parse_poly(R"({"polygon": [[0,0],[2,0],[0,2]]})");
        CHECK(false);
    } catch (const InvalidPolygonError& e) {
        CHECK(std::string(e.what()).find("f.json") != std::string::npos);
    }
}

TEST_CASE("width files parse and canonicalize directions") {
    Json j = Json::parse(R"({"widths": [[2, -4, 6], [1, 0, 2]]})");
    auto entries = width_entries_from_json(j, "w.json");
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].direction == primitive(-1, 2));
    CHECK(entries[0].width == 6);
    CHECK(entries[1].direction == primitive(1, 0));

    CHECK_THROWS_AS(width_entries_from_json(Json::parse(R"({"widths": [[0, 0, 2]]})"), "w"),
                    ParseError);
    CHECK_THROWS_AS(width_entries_from_json(Json::parse(R"({"widths": [[1, 0]]})"), "w"),
                    ParseError);
    CHECK_THROWS_AS(width_entries_from_json(Json::parse(R"({"widths": 3})"), "w"), ParseError);
}

TEST_CASE("loading a missing or unparseable file raises ParseError") {
    CHECK_THROWS_AS(load_point_set("lxray_test_no_such_file.json"), ParseError);
    TempFile bad("bad.json", "{not json");
    CHECK_THROWS_AS(load_polygon(bad.path), ParseError);
}

TEST_CASE("signature json lists counts under canonical direction keys") {
    ProjectionSignature sig = signature_of_polygon(diamond());
    CHECK(to_json(sig).dump() ==
          R"({"counts":{"-1,1":3,"0,1":3,"1,0":3,"1,1":3},"total":5})");
}

TEST_CASE("sweep report json carries hypothesis hits only for the lemma sweep") {
    SweepReport edge;
    edge.kind = "check-thm32";
    edge.radius = 1;
    edge.polygons = 8;
    edge.checks = 20;
    Json je = to_json(edge);
    CHECK(!je.contains("hypothesis_hits"));
    CHECK(je.at("failures").empty());

    SweepReport lemma;
    lemma.kind = "check-lemma35";
    lemma.hypothesis_hits = 7;
    CHECK(to_json(lemma).at("hypothesis_hits") == 7);

    CheckRecord rec{"thm32", square(), primitive(1, 0), false};
    lemma.failures.push_back(rec);
    Json jr = to_json(lemma).at("failures").at(0);
    CHECK(jr.at("kind") == "thm32");
    CHECK(jr.at("direction") == Json::array({1, 0}));
    CHECK(jr.at("holds") == false);
}

TEST_CASE("uniqueness verdict json spells out the witness direction") {
    UniquenessVerdict differ;
    differ.witness_direction = primitive(-2, 1);
    Json jd = to_json(differ);
    CHECK(jd.at("witness_direction") == Json::array({-2, 1}));
    CHECK(jd.at("theorem_violation") == false);

    UniquenessVerdict equal;
    equal.equal_polygons = true;
    equal.first_signature_match = true;
    equal.dilate_signature_match = true;
    CHECK(to_json(equal).at("witness_direction").is_null());
}

TEST_CASE("collision report json nests class members as vertex lists") {
    CollisionReport rep;
    rep.radius = 1;
    rep.polygons_enumerated = 2;
    rep.classes.push_back({"k", {square(), diamond()}});
    Json j = to_json(rep);
    CHECK(j.at("radius") == 1);
    CHECK(j.at("with_dilate") == false);
    CHECK(j.at("collision_classes").at(0).at("key") == "k");
    CHECK(j.at("collision_classes").at(0).at("polygons").size() == 2);
}

TEST_CASE("signature index round-trips and deduplicates") {
    TempFile file("index.idx");
    SignatureIndex idx;
    CHECK(idx.insert("a", square()));
    CHECK(idx.insert("a", diamond()));
    CHECK(!idx.insert("a", square()));  // exact duplicate pair
    CHECK(idx.insert("b", square()));   // same polygon under another key is new
    idx.save(file.path);

    SignatureIndex loaded = SignatureIndex::load(file.path);
    REQUIRE(loaded.entries().size() == 3);
    CHECK(loaded.entries() == idx.entries());
    CHECK(!loaded.insert("a", diamond()));
}

TEST_CASE("signature index load reports the offending line") {
    CHECK(SignatureIndex::load("lxray_test_absent.idx").entries().empty());

    TempFile no_tab("benttab.idx", "key-without-tab\n");
    CHECK_THROWS_AS(SignatureIndex::load(no_tab.path), ParseError);

    TempFile bad_json("badjson.idx", "k\t{broken\n");
    try {
        SignatureIndex::load(bad_json.path);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find(bad_json.path + ":1") != std::string::npos);
    }
}
