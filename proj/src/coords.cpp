#include "tilescale/coords.hpp"

#include <set>
#include <stdexcept>

namespace tilescale {

CoordReport rect_coord_sets(const RectTiling& t) {
    check_structure(t);
    std::set<Rat> xs, ys;
    for (const RectTile& a : t.tiles) {
        xs.insert(a.x0);
        xs.insert(a.x1);
        ys.insert(a.y0);
        ys.insert(a.y1);
    }
    CoordReport rep;
    rep.xs.assign(xs.begin(), xs.end());
    rep.ys.assign(ys.begin(), ys.end());
    rep.count = rep.xs.size() + rep.ys.size();
    rep.bound = Rat(Int(t.tiles.size() + 3));
    rep.pass = Rat(Int(rep.count)) <= rep.bound;
    return rep;
}

HyperplaneCover cuboid_hyperplane_cover(const CuboidTiling& t) {
    check_structure(t);
    size_t d = t.region.dim();
    // A facet hyperplane is interior iff its coordinate differs from both
    // region boundary values on that axis (region faces are full slices).
    auto facet_is_interior = [&](size_t ax, const Rat& v) {
        return v != t.region.lo[ax] && v != t.region.hi[ax];
    };
    std::set<std::pair<size_t, Rat>> planes;
    for (const CuboidTile& a : t.tiles)
        for (size_t ax = 0; ax < d; ++ax) {
            if (facet_is_interior(ax, a.box.lo[ax])) planes.insert({ax, a.box.lo[ax]});
            if (facet_is_interior(ax, a.box.hi[ax])) planes.insert({ax, a.box.hi[ax]});
        }
    HyperplaneCover cover;
    cover.planes.assign(planes.begin(), planes.end());
    cover.bound = t.tiles.size() == 0 ? 0 : t.tiles.size() - 1;
    cover.pass = cover.planes.size() <= cover.bound || t.tiles.empty();
    cover.covers = true;
    for (const CuboidTile& a : t.tiles)
        for (size_t ax = 0; ax < d && cover.covers; ++ax) {
            if (facet_is_interior(ax, a.box.lo[ax]) &&
                !planes.count({ax, a.box.lo[ax]}))
                cover.covers = false;
            if (facet_is_interior(ax, a.box.hi[ax]) &&
                !planes.count({ax, a.box.hi[ax]}))
                cover.covers = false;
        }
    return cover;
}

AxisPairReport cuboid_best_axis_pair(const CuboidTiling& t) {
    check_structure(t);
    size_t d = t.region.dim();
    std::vector<std::set<Rat>> per_axis(d);
    for (const CuboidTile& a : t.tiles)
        for (size_t ax = 0; ax < d; ++ax) {
            per_axis[ax].insert(a.box.lo[ax]);
            per_axis[ax].insert(a.box.hi[ax]);
        }
    AxisPairReport rep;
    size_t best = SIZE_MAX;
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j) {
            size_t c = per_axis[i].size() + per_axis[j].size();
            if (c < best) {
                best = c;
                rep.i = i;
                rep.j = j;
            }
        }
    rep.count = best;
    rep.bound = Rat(Int(2) * (Int(t.tiles.size()) - 1), Int(d)) + Rat(4);
    rep.pass = Rat(Int(rep.count)) <= rep.bound;
    return rep;
}

namespace {

std::set<TriLine> tri_region_boundary_lines(const TriRegion& r) {
    std::set<TriLine> lines;
    if (const auto* tr = std::get_if<TriangleRegion>(&r)) {
        lines.insert({TriLineClass::Vertical, tr->a});
        lines.insert({TriLineClass::Horizontal, tr->b});
        lines.insert({TriLineClass::Diagonal, tr->a + tr->b + tr->side});
    } else if (const auto* tz = std::get_if<TrapezoidRegion>(&r)) {
        lines.insert({TriLineClass::Vertical, tz->a});
        lines.insert({TriLineClass::Horizontal, tz->b});
        lines.insert({TriLineClass::Horizontal, tz->b + tz->height});
        lines.insert({TriLineClass::Diagonal, tz->a + tz->b + tz->base});
    } else {
        throw std::invalid_argument(
            "tri_line_cover: region must be a triangle or a trapezoid");
    }
    return lines;
}

std::array<TriLine, 3> tri_tile_edge_lines(const TriTile& a) {
    return {TriLine{TriLineClass::Vertical, a.a},
            TriLine{TriLineClass::Horizontal, a.b},
            TriLine{TriLineClass::Diagonal, a.a + a.b + a.c}};
}

} // namespace

LineCover tri_line_cover(const TriTiling& t) {
    check_structure(t);
    std::set<TriLine> boundary = tri_region_boundary_lines(t.region);
    std::set<TriLine> lines;
    for (const TriTile& a : t.tiles)
        for (const TriLine& l : tri_tile_edge_lines(a))
            if (!boundary.count(l)) lines.insert(l);
    LineCover cover;
    cover.lines.assign(lines.begin(), lines.end());
    cover.bound = t.tiles.empty() ? 0 : t.tiles.size() - 1;
    cover.pass = cover.lines.size() <= cover.bound || t.tiles.empty();
    cover.covers = true;
    for (const TriTile& a : t.tiles)
        for (const TriLine& l : tri_tile_edge_lines(a))
            if (!boundary.count(l) && !lines.count(l)) cover.covers = false;
    return cover;
}

RotationReport tri_best_rotation(const TriTiling& t) {
    const auto* tr = std::get_if<TriangleRegion>(&t.region);
    if (!tr || !tr->a.is_zero() || !tr->b.is_zero() || tr->side != Rat(1))
        throw std::invalid_argument("tri_best_rotation: region must be T(0,0,1)");

    auto coord_set = [](const TriTiling& tt) {
        std::set<Rat> s;
        for (const TriTile& a : tt.tiles) {
            s.insert(a.a);
            s.insert(a.a + a.c);
            s.insert(a.b);
            s.insert(a.b + a.c);
        }
        s.erase(Rat(0));
        s.erase(Rat(1));
        return s;
    };

    RotationReport rep;
    TriTiling cur = t;
    std::set<Rat> best;
    for (int rot = 0; rot < 3; ++rot) {
        std::set<Rat> s = coord_set(cur);
        if (rot == 0 || s.size() < best.size()) {
            best = std::move(s);
            rep.rotation = rot;
            rep.rotated = cur;
        }
        if (rot < 2) cur = rotate_tri_120(cur);
    }
    rep.coords.assign(best.begin(), best.end());
    rep.bound = Rat(Int(2) * Int(t.tiles.size()) - 2, Int(3));
    rep.pass = Rat(Int(rep.coords.size())) <= rep.bound;
    return rep;
}

} // namespace tilescale
