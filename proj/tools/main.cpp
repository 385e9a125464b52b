// tilescale command-line tool: validate, analyze, scale, generate, search and
// render exact-rational tilings stored as JSON documents.

#include "tilescale/generators.hpp"
#include "tilescale/integerize.hpp"
#include "tilescale/json_io.hpp"
#include "tilescale/oracle.hpp"
#include "tilescale/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

namespace ts = tilescale;
using ts::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1; // validation failed / pipeline hypothesis violated
constexpr int kExitUsage = 2;  // parse, structure or usage errors

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ts::ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

ts::AnyTiling load_tiling(const std::string& path) {
    return ts::parse_tiling(read_file(path));
}

void emit(const json& doc, bool as_json, const std::string& human) {
    if (as_json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << human << "\n";
}

// --------------------------------------------------------------------------
// validate
// --------------------------------------------------------------------------

int cmd_validate(const std::string& path, bool as_json) {
    ts::AnyTiling t = load_tiling(path);
    ts::ValidationReport rep =
        std::visit([](const auto& x) { return ts::validate(x); }, t);
    emit(ts::to_json(rep), as_json, rep.pass() ? "pass" : "fail: " + rep.detail);
    return rep.pass() ? kExitOk : kExitDomain;
}

// --------------------------------------------------------------------------
// analyze
// --------------------------------------------------------------------------

int cmd_analyze(const std::string& path, bool as_json) {
    ts::AnyTiling t = load_tiling(path);
    json out;
    std::string human;
    bool ok = true;
    if (const auto* r = std::get_if<ts::RectTiling>(&t)) {
        ts::CoordReport rep = ts::rect_coord_sets(*r);
        out["coord_sets"] = ts::to_json(rep);
        human = "coordinates: " + std::to_string(rep.count) + " <= " +
                rep.bound.str() + (rep.pass ? " (pass)" : " (FAIL)");
        ok = rep.pass;
    } else if (const auto* c = std::get_if<ts::CuboidTiling>(&t)) {
        ts::HyperplaneCover cover = ts::cuboid_hyperplane_cover(*c);
        ts::AxisPairReport pair = ts::cuboid_best_axis_pair(*c);
        out["hyperplane_cover"] = ts::to_json(cover);
        out["best_axis_pair"] = ts::to_json(pair);
        human = "hyperplanes: " + std::to_string(cover.planes.size()) + " <= " +
                std::to_string(cover.bound) +
                (cover.pass && cover.covers ? " (pass)" : " (FAIL)") +
                "; best pair (" + std::to_string(pair.i) + "," +
                std::to_string(pair.j) + "): " + std::to_string(pair.count) +
                " <= " + pair.bound.str() + (pair.pass ? " (pass)" : " (FAIL)");
        ok = cover.pass && cover.covers && pair.pass;
    } else {
        const auto& tri = std::get<ts::TriTiling>(t);
        std::ostringstream os;
        if (!std::holds_alternative<ts::ParallelogramRegion>(tri.region)) {
            ts::LineCover cover = ts::tri_line_cover(tri);
            out["line_cover"] = ts::to_json(cover);
            os << "lines: " << cover.lines.size() << " <= " << cover.bound
               << (cover.pass && cover.covers ? " (pass)" : " (FAIL)");
            ok = ok && cover.pass && cover.covers;
        }
        if (const auto* reg = std::get_if<ts::TriangleRegion>(&tri.region)) {
            ts::Rat s = ts::Rat(1) / reg->side;
            ts::TriTiling norm = ts::scale_translate(tri, s, -s * reg->a, -s * reg->b);
            ts::RotationReport rot = ts::tri_best_rotation(norm);
            out["rotation"] = ts::to_json(rot);
            os << "; rotation " << rot.rotation << ": " << rot.coords.size()
               << " coords <= " << rot.bound.str() << (rot.pass ? " (pass)" : " (FAIL)");
            ok = ok && rot.pass;
        }
        human = os.str();
        if (human.empty()) human = "no cover report for parallelogram regions";
    }
    emit(out, as_json, human);
    return ok ? kExitOk : kExitDomain;
}

// --------------------------------------------------------------------------
// scale
// --------------------------------------------------------------------------

json scale_dirichlet(const ts::AnyTiling& t) {
    if (const auto* r = std::get_if<ts::RectTiling>(&t)) {
        bool all_ratios = !r->tiles.empty();
        bool all_squares = !r->tiles.empty();
        for (const ts::RectTile& tile : r->tiles) {
            all_ratios = all_ratios && tile.ratio.has_value();
            all_squares = all_squares && tile.is_square();
        }
        if (all_ratios) {
            ts::RectScaleCert cert = ts::integerize_rect_tiling(*r);
            json out = ts::to_json(cert);
            if (all_squares) {
                // Squares with declared ratios also run the square pipeline;
                // the minimal q must agree.
                ts::SquareScaleCert sq = ts::integerize_square_tiling(*r);
                out["square_pipeline_q"] = sq.q.str();
                out["consistent"] = sq.q == cert.q;
            }
            return out;
        }
        if (all_squares) return ts::to_json(ts::integerize_square_tiling(*r));
        throw ts::PreconditionViolation(
            "rect tilings need declared ratios or all-square tiles");
    }
    if (const auto* c = std::get_if<ts::CuboidTiling>(&t)) {
        bool all_shapes = !c->tiles.empty();
        bool all_cubes = !c->tiles.empty();
        for (const ts::CuboidTile& tile : c->tiles) {
            all_shapes = all_shapes && tile.shape.has_value();
            for (size_t ax = 1; ax < tile.box.dim(); ++ax)
                all_cubes = all_cubes && tile.box.side(ax) == tile.box.side(0);
        }
        if (all_shapes) return ts::to_json(ts::integerize_hypercuboid_tiling(*c));
        if (all_cubes) return ts::to_json(ts::integerize_hypercube_tiling(*c));
        throw ts::PreconditionViolation(
            "cuboid tilings need shape vectors or all-cube tiles");
    }
    const auto& tri = std::get<ts::TriTiling>(t);
    if (std::holds_alternative<ts::TriangleRegion>(tri.region))
        return ts::to_json(ts::integerize_triangle_tiling(tri));
    return ts::to_json(ts::integerize_trapezoid_or_parallelogram(tri));
}

json scale_oracle(const ts::AnyTiling& t) {
    json out;
    out["method"] = "oracle";
    if (const auto* r = std::get_if<ts::RectTiling>(&t)) {
        ts::Rat lambda = ts::minimal_scale_oracle(*r);
        out["lambda"] = lambda.str();
        out["tiling"] = ts::to_json(ts::scale_translate(*r, lambda, ts::Rat(0), ts::Rat(0)));
    } else if (const auto* c = std::get_if<ts::CuboidTiling>(&t)) {
        ts::Rat lambda = ts::minimal_scale_oracle(*c);
        out["lambda"] = lambda.str();
        std::vector<ts::Rat> zero(c->region.dim(), ts::Rat(0));
        out["tiling"] = ts::to_json(ts::scale_translate(*c, lambda, zero));
    } else {
        const auto& tri = std::get<ts::TriTiling>(t);
        ts::Rat lambda = ts::minimal_scale_oracle(tri);
        out["lambda"] = lambda.str();
        out["tiling"] = ts::to_json(ts::scale_translate(tri, lambda, ts::Rat(0), ts::Rat(0)));
    }
    return out;
}

int cmd_scale(const std::string& path, const std::string& method, bool as_json) {
    ts::AnyTiling t = load_tiling(path);
    ts::ValidationReport rep =
        std::visit([](const auto& x) { return ts::validate(x); }, t);
    if (!rep.pass()) {
        emit(ts::to_json(rep), as_json, "fail: " + rep.detail);
        return kExitDomain;
    }
    json out = method == "oracle" ? scale_oracle(t) : scale_dirichlet(t);
    std::string human = out.contains("q")
                            ? "q = " + out["q"].get<std::string>() + " (bound " +
                                  out["bound"].get<std::string>() + ")"
                            : "lambda = " + out["lambda"].get<std::string>();
    emit(out, as_json, human);
    return kExitOk;
}

// --------------------------------------------------------------------------
// generate
// --------------------------------------------------------------------------

int cmd_generate(const std::string& family, const std::string& kind, int n, int k,
                 int d, uint64_t seed, int depth, int denom,
                 const std::string& out_path) {
    ts::AnyTiling t;
    if (family == "fibonacci") {
        t = ts::fibonacci_tiling(n);
    } else if (family == "dyadic_square") {
        t = ts::dyadic_square_tiling(k);
    } else if (family == "dyadic_cube") {
        t = ts::dyadic_cube_tiling(d, k);
    } else if (family == "dyadic_triangle") {
        t = ts::dyadic_triangle_tiling(k);
    } else if (family == "dehn_sharpness") {
        t = ts::dehn_sharpness_tiling();
    } else if (family == "random_guillotine") {
        if (kind == "rect")
            t = ts::random_guillotine_rect(seed, depth, denom);
        else if (kind == "cuboid")
            t = ts::random_guillotine_cuboid(d, seed, depth, denom);
        else if (kind == "triangle")
            t = ts::random_guillotine_tri(seed, depth);
        else
            throw std::invalid_argument("--kind must be rect, cuboid or triangle");
    } else {
        throw std::invalid_argument("unknown family: " + family);
    }
    std::string text = ts::serialize_tiling(t) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return kExitOk;
}

// --------------------------------------------------------------------------
// search
// --------------------------------------------------------------------------

int cmd_search_min_squares(int width, int height, int max_tiles,
                           const std::string& witness_path, bool as_json) {
    ts::MinSquaresResult res = ts::min_squares_exhaustive(width, height, max_tiles);
    json out;
    out["nodes"] = res.nodes;
    switch (res.status) {
    case ts::SearchStatus::Exact: {
        out["status"] = "exact";
        out["min_tiles"] = res.min_tiles;
        if (std::gcd(width, height) == 1) {
            ts::BoundAudit audit = ts::bound_audit(width, height, res.min_tiles);
            out["audit"] = {{"four_pow_n", audit.four_pow_n.str()},
                            {"max_side", audit.max_side.str()},
                            {"pass", audit.pass},
                            {"conway_two_pow_n", audit.two_pow_n.str()},
                            {"conway_note", audit.conway_note}};
        }
        if (!witness_path.empty())
            write_file(witness_path,
                       ts::serialize_tiling(ts::AnyTiling(*res.witness)) + "\n");
        emit(out, as_json,
             "min tiles = " + std::to_string(res.min_tiles) + " (" +
                 std::to_string(res.nodes) + " nodes)");
        return kExitOk;
    }
    case ts::SearchStatus::ExceedsMaxTiles:
        out["status"] = "exceeds_max_tiles";
        emit(out, as_json, "every tiling needs more than the given tile budget");
        return kExitDomain;
    default:
        out["status"] = "resource_limit";
        emit(out, as_json, "node limit exhausted before the search completed");
        return kExitDomain;
    }
}

// --------------------------------------------------------------------------
// render
// --------------------------------------------------------------------------

int cmd_render(const std::string& path, const std::string& out_path,
               const std::vector<std::string>& section) {
    ts::AnyTiling t = load_tiling(path);
    if (const auto* c = std::get_if<ts::CuboidTiling>(&t)) {
        if (section.size() < 2)
            throw ts::PreconditionViolation(
                "cuboid tilings need --section i j anchor...");
        size_t i = std::stoul(section[0]);
        size_t j = std::stoul(section[1]);
        std::vector<ts::Rat> anchor;
        for (size_t k = 2; k < section.size(); ++k)
            anchor.push_back(ts::Rat::parse(section[k]));
        t = ts::cuboid_cross_section(*c, i, j, anchor);
    }
    write_file(out_path, ts::render_svg(t));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-rational tiling toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    std::string file, method = "dirichlet", out_path, family, kind = "rect";
    int n = 1, k = 1, d = 3, depth = 3, denom = 16;
    uint64_t seed = 1;
    int width = 1, height = 1, max_tiles = 64;
    std::string witness_path;
    std::vector<std::string> section;

    auto* validate_cmd = app.add_subcommand("validate", "check a tiling document");
    validate_cmd->add_option("file", file)->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "coordinate and cover reports");
    analyze_cmd->add_option("file", file)->required();

    auto* scale_cmd =
        app.add_subcommand("scale", "rescale so all tile sides are integers");
    scale_cmd->add_option("file", file)->required();
    scale_cmd->add_option("--method", method, "dirichlet or oracle")
        ->check(CLI::IsMember({"dirichlet", "oracle"}));

    auto* generate_cmd = app.add_subcommand("generate", "build a classic tiling");
    generate_cmd
        ->add_option("family", family,
                     "fibonacci, dyadic_square, dyadic_cube, dyadic_triangle, "
                     "dehn_sharpness or random_guillotine")
        ->required();
    generate_cmd->add_option("--n", n);
    generate_cmd->add_option("--k", k);
    generate_cmd->add_option("--d", d);
    generate_cmd->add_option("--seed", seed);
    generate_cmd->add_option("--depth", depth);
    generate_cmd->add_option("--denom", denom);
    generate_cmd->add_option("--kind", kind, "rect, cuboid or triangle");
    generate_cmd->add_option("-o,--output", out_path);

    auto* search_cmd = app.add_subcommand("search", "exhaustive searches");
    auto* min_squares_cmd =
        search_cmd->add_subcommand("min-squares", "minimal squares tiling a rectangle");
    min_squares_cmd->add_option("--width", width)->required();
    min_squares_cmd->add_option("--height", height)->required();
    min_squares_cmd->add_option("--max-tiles", max_tiles);
    min_squares_cmd->add_option("--emit-witness", witness_path);

    auto* render_cmd = app.add_subcommand("render", "write an SVG figure");
    render_cmd->add_option("file", file)->required();
    render_cmd->add_option("-o,--output", out_path)->required();
    render_cmd->add_option("--section", section,
                           "axes i j and anchor values (cuboids only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(file, as_json);
        if (analyze_cmd->parsed()) return cmd_analyze(file, as_json);
        if (scale_cmd->parsed()) return cmd_scale(file, method, as_json);
        if (generate_cmd->parsed())
            return cmd_generate(family, kind, n, k, d, seed, depth, denom, out_path);
        if (search_cmd->parsed() && min_squares_cmd->parsed())
            return cmd_search_min_squares(width, height, max_tiles, witness_path,
                                          as_json);
        if (render_cmd->parsed()) return cmd_render(file, out_path, section);
        std::cerr << "no subcommand given\n";
        return kExitUsage;
    } catch (const ts::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ts::PreconditionViolation& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ts::CertificationFailure& e) {
        std::cerr << "certification failure: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
