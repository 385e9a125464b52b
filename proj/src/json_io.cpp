#include "tilescale/json_io.hpp"

namespace tilescale {

json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j, const std::string& where) {
    try {
        if (j.is_string()) return Rat::parse(j.get<std::string>());
        if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": expected a rational as \"num/den\" string");
}

namespace {

Int int_from_json(const json& j, const std::string& where) {
    Rat r = rat_from_json(j, where);
    if (!r.is_integer()) throw ParseError(where + ": expected an integer");
    return r.num();
}

const json& field(const json& j, const char* name, const std::string& where) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(where + ": missing field '" + name + "'");
    return *it;
}

std::vector<Rat> rat_vec(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    std::vector<Rat> out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(rat_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

json rat_vec_to_json(const std::vector<Rat>& v) {
    json arr = json::array();
    for (const Rat& r : v) arr.push_back(rat_to_json(r));
    return arr;
}

json int_vec_to_json(const std::vector<Int>& v) {
    json arr = json::array();
    for (const Int& x : v) arr.push_back(x.str());
    return arr;
}

} // namespace

// ---------------------------------------------------------------------------
// Tilings
// ---------------------------------------------------------------------------

json to_json(const RectTiling& t) {
    json doc;
    doc["kind"] = "rect";
    doc["region"] = {{"x0", rat_to_json(t.region.x0)},
                     {"x1", rat_to_json(t.region.x1)},
                     {"y0", rat_to_json(t.region.y0)},
                     {"y1", rat_to_json(t.region.y1)}};
    json tiles = json::array();
    for (const RectTile& a : t.tiles) {
        json tile = {{"x0", rat_to_json(a.x0)},
                     {"x1", rat_to_json(a.x1)},
                     {"y0", rat_to_json(a.y0)},
                     {"y1", rat_to_json(a.y1)}};
        if (a.ratio) tile["ratio"] = json::array({a.ratio->p.str(), a.ratio->q.str()});
        tiles.push_back(std::move(tile));
    }
    doc["tiles"] = std::move(tiles);
    return doc;
}

json to_json(const CuboidTiling& t) {
    json doc;
    doc["kind"] = "cuboid";
    doc["dim"] = t.region.dim();
    doc["region"] = {{"lo", rat_vec_to_json(t.region.lo)},
                     {"hi", rat_vec_to_json(t.region.hi)}};
    json tiles = json::array();
    for (const CuboidTile& a : t.tiles) {
        json tile = {{"lo", rat_vec_to_json(a.box.lo)},
                     {"hi", rat_vec_to_json(a.box.hi)}};
        if (a.shape) {
            json shape = json::array();
            for (const Int& e : *a.shape) shape.push_back(e.str());
            tile["shape"] = std::move(shape);
        }
        tiles.push_back(std::move(tile));
    }
    doc["tiles"] = std::move(tiles);
    return doc;
}

json to_json(const TriTiling& t) {
    json doc;
    doc["kind"] = "triangle";
    doc["region"] = std::visit(
        [](const auto& r) -> json {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, TriangleRegion>)
                return {{"type", "triangle"},
                        {"a", rat_to_json(r.a)},
                        {"b", rat_to_json(r.b)},
                        {"side", rat_to_json(r.side)}};
            else if constexpr (std::is_same_v<T, TrapezoidRegion>)
                return {{"type", "trapezoid"},
                        {"a", rat_to_json(r.a)},
                        {"b", rat_to_json(r.b)},
                        {"base", rat_to_json(r.base)},
                        {"top", rat_to_json(r.top)},
                        {"height", rat_to_json(r.height)}};
            else
                return {{"type", "parallelogram"},
                        {"a", rat_to_json(r.a)},
                        {"b", rat_to_json(r.b)},
                        {"p", rat_to_json(r.p)},
                        {"q", rat_to_json(r.q)}};
        },
        t.region);
    json tiles = json::array();
    for (const TriTile& a : t.tiles)
        tiles.push_back({{"a", rat_to_json(a.a)},
                         {"b", rat_to_json(a.b)},
                         {"c", rat_to_json(a.c)}});
    doc["tiles"] = std::move(tiles);
    return doc;
}

json to_json(const AnyTiling& t) {
    return std::visit([](const auto& x) { return to_json(x); }, t);
}

namespace {

RectTiling rect_from_json(const json& doc) {
    RectTiling t;
    const json& reg = field(doc, "region", "document");
    t.region.x0 = rat_from_json(field(reg, "x0", "region"), "region.x0");
    t.region.x1 = rat_from_json(field(reg, "x1", "region"), "region.x1");
    t.region.y0 = rat_from_json(field(reg, "y0", "region"), "region.y0");
    t.region.y1 = rat_from_json(field(reg, "y1", "region"), "region.y1");
    const json& tiles = field(doc, "tiles", "document");
    if (!tiles.is_array()) throw ParseError("tiles: expected an array");
    for (size_t i = 0; i < tiles.size(); ++i) {
        std::string where = "tiles[" + std::to_string(i) + "]";
        const json& tj = tiles[i];
        RectTile a;
        a.x0 = rat_from_json(field(tj, "x0", where), where + ".x0");
        a.x1 = rat_from_json(field(tj, "x1", where), where + ".x1");
        a.y0 = rat_from_json(field(tj, "y0", where), where + ".y0");
        a.y1 = rat_from_json(field(tj, "y1", where), where + ".y1");
        if (tj.contains("ratio")) {
            const json& r = tj["ratio"];
            if (!r.is_array() || r.size() != 2)
                throw ParseError(where + ".ratio: expected [p, q]");
            a.ratio = RatioPQ{int_from_json(r[0], where + ".ratio[0]"),
                              int_from_json(r[1], where + ".ratio[1]")};
        }
        t.tiles.push_back(std::move(a));
    }
    return t;
}

CuboidTiling cuboid_from_json(const json& doc) {
    CuboidTiling t;
    const json& reg = field(doc, "region", "document");
    t.region.lo = rat_vec(field(reg, "lo", "region"), "region.lo");
    t.region.hi = rat_vec(field(reg, "hi", "region"), "region.hi");
    if (doc.contains("dim") &&
        doc["dim"].get<size_t>() != t.region.lo.size())
        throw ParseError("dim does not match region dimension");
    const json& tiles = field(doc, "tiles", "document");
    if (!tiles.is_array()) throw ParseError("tiles: expected an array");
    for (size_t i = 0; i < tiles.size(); ++i) {
        std::string where = "tiles[" + std::to_string(i) + "]";
        const json& tj = tiles[i];
        CuboidTile a;
        a.box.lo = rat_vec(field(tj, "lo", where), where + ".lo");
        a.box.hi = rat_vec(field(tj, "hi", where), where + ".hi");
        if (tj.contains("shape")) {
            const json& s = tj["shape"];
            if (!s.is_array()) throw ParseError(where + ".shape: expected an array");
            std::vector<Int> shape;
            for (size_t k = 0; k < s.size(); ++k)
                shape.push_back(
                    int_from_json(s[k], where + ".shape[" + std::to_string(k) + "]"));
            a.shape = std::move(shape);
        }
        t.tiles.push_back(std::move(a));
    }
    return t;
}

TriTiling tri_from_json(const json& doc) {
    TriTiling t;
    const json& reg = field(doc, "region", "document");
    std::string type = field(reg, "type", "region").get<std::string>();
    if (type == "triangle") {
        t.region = TriangleRegion{rat_from_json(field(reg, "a", "region"), "region.a"),
                                  rat_from_json(field(reg, "b", "region"), "region.b"),
                                  rat_from_json(field(reg, "side", "region"), "region.side")};
    } else if (type == "trapezoid") {
        t.region = TrapezoidRegion{
            rat_from_json(field(reg, "a", "region"), "region.a"),
            rat_from_json(field(reg, "b", "region"), "region.b"),
            rat_from_json(field(reg, "base", "region"), "region.base"),
            rat_from_json(field(reg, "top", "region"), "region.top"),
            rat_from_json(field(reg, "height", "region"), "region.height")};
    } else if (type == "parallelogram") {
        t.region = ParallelogramRegion{
            rat_from_json(field(reg, "a", "region"), "region.a"),
            rat_from_json(field(reg, "b", "region"), "region.b"),
            rat_from_json(field(reg, "p", "region"), "region.p"),
            rat_from_json(field(reg, "q", "region"), "region.q")};
    } else {
        throw ParseError("region.type: unknown kind '" + type + "'");
    }
    const json& tiles = field(doc, "tiles", "document");
    if (!tiles.is_array()) throw ParseError("tiles: expected an array");
    for (size_t i = 0; i < tiles.size(); ++i) {
        std::string where = "tiles[" + std::to_string(i) + "]";
        const json& tj = tiles[i];
        t.tiles.push_back({rat_from_json(field(tj, "a", where), where + ".a"),
                           rat_from_json(field(tj, "b", where), where + ".b"),
                           rat_from_json(field(tj, "c", where), where + ".c")});
    }
    return t;
}

} // namespace

AnyTiling tiling_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("document: expected a JSON object");
    std::string kind = field(doc, "kind", "document").get<std::string>();
    if (kind == "rect") return rect_from_json(doc);
    if (kind == "cuboid") return cuboid_from_json(doc);
    if (kind == "triangle") return tri_from_json(doc);
    throw ParseError("kind: unknown tiling kind '" + kind + "'");
}

AnyTiling parse_tiling(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what());
    }
    return tiling_from_json(doc);
}

std::string serialize_tiling(const AnyTiling& t, int indent) {
    return to_json(t).dump(indent);
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

json to_json(const ValidationReport& r) {
    return {{"containment_ok", r.containment_ok},
            {"disjoint_ok", r.disjoint_ok},
            {"area_ok", r.area_ok},
            {"pass", r.pass()},
            {"detail", r.detail}};
}

json to_json(const CoordReport& r) {
    return {{"xs", rat_vec_to_json(r.xs)}, {"ys", rat_vec_to_json(r.ys)},
            {"count", r.count},            {"bound", r.bound.str()},
            {"pass", r.pass}};
}

json to_json(const HyperplaneCover& r) {
    json planes = json::array();
    for (const auto& [axis, value] : r.planes)
        planes.push_back(json::array({axis, rat_to_json(value)}));
    return {{"planes", std::move(planes)},
            {"count", r.planes.size()},
            {"bound", r.bound},
            {"pass", r.pass},
            {"covers", r.covers}};
}

json to_json(const AxisPairReport& r) {
    return {{"i", r.i},           {"j", r.j},    {"count", r.count},
            {"bound", r.bound.str()}, {"pass", r.pass}};
}

namespace {
const char* line_class_name(TriLineClass c) {
    switch (c) {
    case TriLineClass::Vertical: return "vertical";
    case TriLineClass::Horizontal: return "horizontal";
    default: return "diagonal";
    }
}
} // namespace

json to_json(const LineCover& r) {
    json lines = json::array();
    for (const TriLine& l : r.lines)
        lines.push_back({{"class", line_class_name(l.cls)},
                         {"value", rat_to_json(l.value)}});
    return {{"lines", std::move(lines)},
            {"count", r.lines.size()},
            {"bound", r.bound},
            {"pass", r.pass},
            {"covers", r.covers}};
}

json to_json(const RotationReport& r) {
    return {{"rotation", r.rotation},
            {"coords", rat_vec_to_json(r.coords)},
            {"count", r.coords.size()},
            {"bound", r.bound.str()},
            {"pass", r.pass}};
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

json to_json(const SquareScaleCert& c) {
    return {{"q", c.q.str()},
            {"bound", c.bound.str()},
            {"sides", int_vec_to_json(c.sides)},
            {"tiling", to_json(c.scaled)}};
}

json to_json(const RectScaleCert& c) {
    json sides = json::array();
    for (const auto& s : c.sides)
        sides.push_back(json::array({s[0].str(), s[1].str()}));
    return {{"q", c.q.str()},
            {"bound", c.bound.str()},
            {"multipliers", int_vec_to_json(c.multipliers)},
            {"sides", std::move(sides)},
            {"tiling", to_json(c.scaled)}};
}

json to_json(const CubeScaleCert& c) {
    return {{"q", c.q.str()},
            {"bound", c.shortest_bound.str()},
            {"longest_bound", c.longest_bound.str()},
            {"axes", json::array({c.axis_i, c.axis_j})},
            {"sides", int_vec_to_json(c.sides)},
            {"sections_checked", c.sections_checked},
            {"tiling", to_json(c.scaled)}};
}

json to_json(const CuboidScaleCert& c) {
    json sides = json::array();
    for (const auto& vec : c.sides) sides.push_back(int_vec_to_json(vec));
    return {{"q", c.q.str()},
            {"bound", c.bound.str()},
            {"axes", json::array({c.axis_i, c.axis_j})},
            {"multipliers", int_vec_to_json(c.multipliers)},
            {"sides", std::move(sides)},
            {"tiling", to_json(c.scaled)}};
}

json to_json(const TriScaleCert& c) {
    return {{"q", c.q.str()},
            {"bound", c.bound.str()},
            {"rotation", c.rotation},
            {"sides", int_vec_to_json(c.sides)},
            {"tiling", to_json(c.scaled)}};
}

} // namespace tilescale
