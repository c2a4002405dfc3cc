// lattice-xray: command-line front end for the lxray library.
//
// Exit codes: 0 = success / no violation, 1 = usage or input error,
// 2 = theorem violation (a collision under the two-dilation signature key or
// a failed closed-form check).

#include <charconv>
#include <iostream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "lxray/io.hpp"

namespace {

using namespace lxray;

Int parse_int_token(std::string_view text, const std::string& context) {
    Int value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError(context + ": expected an integer, got '" + std::string(text) + "'");
    return value;
}

// Accepts any nonzero integer pair "a,b" and canonicalizes it; the
// normalization is echoed on the error stream so scripted callers see which
// direction the output refers to.
PrimitiveDirection parse_direction(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw ParseError("--dir: expected 'a,b', got '" + text + "'");
    std::string_view view(text);
    Int a = parse_int_token(view.substr(0, comma), "--dir");
    Int b = parse_int_token(view.substr(comma + 1), "--dir");
    PrimitiveDirection u = primitive(a, b);
    if (u.a() != a || u.b() != b)
        std::cerr << "note: direction " << a << "," << b << " canonicalized to " << u.a() << ","
                  << u.b() << "\n";
    return u;
}

// A {"polygon": ...} file contributes its dilation-1 lattice points; a
// {"points": ...} file is taken verbatim.
PointSet load_set_points(const std::string& path) {
    Json j = load_json_file(path);
    if (j.is_object() && j.contains("polygon"))
        return polygon_from_json(j, path).lattice_points(1);
    return point_set_from_json(j, path);
}

void print_sweep_text(std::ostream& os, const SweepReport& rep) {
    os << "checked " << rep.checks << " directions on " << rep.polygons << " polygons";
    if (rep.kind == "check-lemma35") os << ", " << rep.hypothesis_hits << " hypothesis hits";
    os << ": " << rep.failures.size() << (rep.failures.size() == 1 ? " failure" : " failures")
       << "\n";
    for (const auto& f : rep.failures)
        os << "failed " << f.kind << " direction " << f.direction.a() << "," << f.direction.b()
           << " polygon " << polygon_json_line(f.polygon) << "\n";
}

void print_collisions_text(std::ostream& os, const CollisionReport& rep) {
    os << rep.classes.size() << " collision class" << (rep.classes.size() == 1 ? "" : "es")
       << "\n";
    for (std::size_t i = 0; i < rep.classes.size(); ++i) {
        os << "class " << i + 1 << ": key " << rep.classes[i].key << "\n";
        for (const auto& p : rep.classes[i].polygons) os << "  " << polygon_json_line(p) << "\n";
    }
}

int report_sweep(const SweepReport& rep, bool json) {
    if (json)
        std::cout << to_json(rep).dump() << "\n";
    else
        print_sweep_text(std::cout, rep);
    return rep.ok() ? 0 : 2;
}

int report_collisions(const CollisionReport& rep, bool json) {
    if (json)
        std::cout << to_json(rep).dump() << "\n";
    else
        print_collisions_text(std::cout, rep);
    return rep.classes.empty() ? 0 : 2;
}

// find-collisions with --index: merge this run's keyed polygons into the
// on-disk index and regroup over the union, so searches at increasing radius
// accumulate across sessions. polygons_enumerated then counts index entries.
CollisionReport merged_with_index(const std::string& path, const EnumerationSpec& spec,
                                  bool with_dilate) {
    SignatureIndex index = SignatureIndex::load(path);
    CollisionScan scan = scan_collisions(spec, with_dilate);
    for (const auto& [key, polygon] : scan.entries) index.insert(key, polygon);
    index.save(path);
    CollisionReport rep;
    rep.radius = spec.radius;
    rep.polygons_enumerated = static_cast<Int>(index.entries().size());
    rep.with_dilate = with_dilate;
    rep.classes = group_by_key(index.entries());
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-integer toolkit for projection counts of origin-symmetric convex "
                 "lattice sets"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "emit JSON instead of plain text");

    std::string set_path;
    std::string dir_text;
    std::string widths_path;
    std::string index_path;
    std::vector<std::string> cup_paths;
    Int dilate = 1;
    Int radius = 1;
    bool with_dilate = false;
    bool count_only = false;

    // Range validation is left to the library so messages stay integer-typed.
    auto add_radius = [&radius](CLI::App* cmd) {
        cmd->add_option("--radius", radius, "bounding box [-R,R]^2")->required();
    };

    CLI::App* cmd_project = app.add_subcommand("project", "projection count along a direction");
    cmd_project->add_option("--set", set_path, "point-set or polygon JSON file")->required();
    cmd_project->add_option("--dir", dir_text, "direction 'a,b'")->required();

    CLI::App* cmd_width = app.add_subcommand("width", "integer width along a direction");
    cmd_width->add_option("--set", set_path, "point-set or polygon JSON file")->required();
    cmd_width->add_option("--dir", dir_text, "direction 'a,b'")->required();

    CLI::App* cmd_signature =
        app.add_subcommand("signature", "projection signature over all difference directions");
    cmd_signature->add_option("--set", set_path, "point-set or polygon JSON file")->required();
    cmd_signature->add_option("--dilate", dilate, "dilation factor (default 1)");

    CLI::App* cmd_pick = app.add_subcommand("pick", "doubled area of a polygon");
    cmd_pick->add_option("--set", set_path, "polygon JSON file")->required();

    CLI::App* cmd_thm32 =
        app.add_subcommand("check-thm32", "edge-direction projection formula sweep");
    add_radius(cmd_thm32);

    CLI::App* cmd_lemma35 = app.add_subcommand("check-lemma35", "doubling implication sweep");
    add_radius(cmd_lemma35);

    CLI::App* cmd_verify =
        app.add_subcommand("verify-uniqueness", "two-dilation signature uniqueness sweep");
    add_radius(cmd_verify);

    CLI::App* cmd_find = app.add_subcommand("find-collisions", "group polygons by signature key");
    add_radius(cmd_find);
    cmd_find->add_flag("--with-dilate", with_dilate, "key on dilation-1 and dilation-2 signatures");
    cmd_find->add_option("--index", index_path, "signature index file to merge into and update");

    CLI::App* cmd_reconstruct =
        app.add_subcommand("reconstruct", "polygon from edge-direction widths");
    cmd_reconstruct->add_option("--widths", widths_path, "widths JSON file")->required();

    CLI::App* cmd_enumerate =
        app.add_subcommand("enumerate", "all origin-symmetric convex lattice polygons in the box");
    add_radius(cmd_enumerate);
    cmd_enumerate->add_flag("--count-only", count_only, "print only the polygon count");

    CLI::App* cmd_cup = app.add_subcommand("cup", "convex hull of the union of two polygons");
    cmd_cup->add_option("--set", cup_paths, "polygon JSON file (given twice)")
        ->required()
        ->expected(2);

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*cmd_project) {
            std::cout << projection_count(load_set_points(set_path), parse_direction(dir_text))
                      << "\n";
        } else if (*cmd_width) {
            std::cout << integer_width(load_set_points(set_path), parse_direction(dir_text))
                      << "\n";
        } else if (*cmd_signature) {
            ProjectionSignature sig = signature(load_set_points(set_path), dilate);
            if (json)
                std::cout << to_json(sig).dump() << "\n";
            else
                std::cout << signature_key(sig) << "\n";
        } else if (*cmd_pick) {
            std::cout << pick_area2(load_polygon(set_path)) << "\n";
        } else if (*cmd_thm32) {
            return report_sweep(run_edge_formula_sweep({radius, {}}), json);
        } else if (*cmd_lemma35) {
            return report_sweep(run_lemma35_sweep({radius, {}}), json);
        } else if (*cmd_verify) {
            return report_collisions(verify_theorem12({radius, {}}), json);
        } else if (*cmd_find) {
            CollisionReport rep = index_path.empty()
                                      ? find_collisions({radius, {}}, with_dilate)
                                      : merged_with_index(index_path, {radius, {}}, with_dilate);
            const int code = report_collisions(rep, json);
            return with_dilate ? code : 0;
        } else if (*cmd_reconstruct) {
            std::cout << polygon_json_line(reconstruct_from_widths(load_width_entries(widths_path)))
                      << "\n";
        } else if (*cmd_enumerate) {
            if (count_only) {
                Int count = 0;
                enumerate_symmetric_polygons({radius, {}},
                                             [&count](const ConvexLatticePolygon&) { ++count; });
                std::cout << count << "\n";
            } else {
                enumerate_symmetric_polygons({radius, {}}, [](const ConvexLatticePolygon& p) {
                    std::cout << polygon_json_line(p) << "\n";
                });
            }
        } else if (*cmd_cup) {
            std::cout << polygon_json_line(cup(load_polygon(cup_paths[0]), load_polygon(cup_paths[1])))
                      << "\n";
        }
    } catch (const TheoremViolationError& e) {
        return report_collisions(e.report(), json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
