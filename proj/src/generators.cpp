#include "tilescale/generators.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace tilescale {

namespace {

uint64_t draw(std::mt19937_64& rng, uint64_t n) { return rng() % n; }

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

} // namespace

RectTiling fibonacci_tiling(int n) {
    require(n >= 1, "fibonacci_tiling: n must be >= 1");
    RectTiling t;
    t.region = {Rat(0), Rat(1), Rat(0), Rat(1)};
    t.tiles.push_back({Rat(0), Rat(1), Rat(0), Rat(1), std::nullopt});
    for (int k = 2; k <= n; ++k) {
        Rat w = t.region.width();
        Rat h = t.region.height();
        t.tiles.push_back({w, w + h, Rat(0), h, std::nullopt});
        t.region.x1 = w + h;
        t = transpose(t);
    }
    return t;
}

RectTiling dyadic_square_tiling(int k) {
    require(k >= 1, "dyadic_square_tiling: k must be >= 1");
    RectTiling t;
    t.region = {Rat(0), Rat(1), Rat(0), Rat(1)};
    Rat x0(0), y0(0), side(1);
    for (int level = 1; level <= k; ++level) {
        Rat h = side / Rat(2);
        // Quadrants: keep bottom-left, bottom-right, top-right; recurse into
        // the top-left one (emit all four at the last level).
        RectTile bl{x0, x0 + h, y0, y0 + h, std::nullopt};
        RectTile br{x0 + h, x0 + side, y0, y0 + h, std::nullopt};
        RectTile tr{x0 + h, x0 + side, y0 + h, y0 + side, std::nullopt};
        RectTile tl{x0, x0 + h, y0 + h, y0 + side, std::nullopt};
        t.tiles.push_back(bl);
        t.tiles.push_back(br);
        t.tiles.push_back(tr);
        if (level == k) {
            t.tiles.push_back(tl);
        } else {
            y0 += h;
            side = h;
        }
    }
    return t;
}

CuboidTiling dyadic_cube_tiling(int d, int k) {
    require(d >= 2, "dyadic_cube_tiling: d must be >= 2");
    require(k >= 1, "dyadic_cube_tiling: k must be >= 1");
    CuboidTiling t;
    t.region.lo.assign(d, Rat(0));
    t.region.hi.assign(d, Rat(1));
    std::vector<Rat> lo(d, Rat(0));
    Rat side(1);
    // Recursion octant: low half on every axis except axis 1 (the top-left
    // quadrant when d = 2, matching dyadic_square_tiling).
    const unsigned recurse_mask = 2;
    for (int level = 1; level <= k; ++level) {
        Rat h = side / Rat(2);
        for (unsigned m = 0; m < (1u << d); ++m) {
            if (level < k && m == recurse_mask) continue;
            CuboidTile tile;
            for (int ax = 0; ax < d; ++ax) {
                Rat base = lo[ax] + ((m >> ax) & 1u ? h : Rat(0));
                tile.box.lo.push_back(base);
                tile.box.hi.push_back(base + h);
            }
            t.tiles.push_back(std::move(tile));
        }
        if (level < k) {
            lo[1] += h;
            side = h;
        }
    }
    return t;
}

TriTiling dyadic_triangle_tiling(int k) {
    require(k >= 1, "dyadic_triangle_tiling: k must be >= 1");
    TriTiling t;
    t.region = TriangleRegion{Rat(0), Rat(0), Rat(1)};
    Rat a(0), b(0), c(1);
    for (int level = 1; level <= k; ++level) {
        Rat h = c / Rat(2);
        t.tiles.push_back({a, b, h});
        t.tiles.push_back({a + h, b, h});
        t.tiles.push_back({a + h, b + h, -h});
        if (level == k) {
            t.tiles.push_back({a, b + h, h});
        } else {
            b += h; // apex sub-triangle
            c = h;
        }
    }
    return t;
}

RectTiling dehn_sharpness_tiling() {
    const Rat q1(1, 4), q3(3, 4), one(1), zero(0);
    RectTiling t;
    t.region = {-one, one, -one, one};
    auto add = [&](Rat x0, Rat x1, Rat y0, Rat y1) {
        t.tiles.push_back({std::move(x0), std::move(x1), std::move(y0),
                           std::move(y1), std::nullopt});
    };
    // Four 3/4-squares in the corners.
    add(-one, -q1, q1, one);
    add(q1, one, q1, one);
    add(-one, -q1, -one, -q1);
    add(q1, one, -one, -q1);
    // Five 1/2-squares: center plus one at each edge midpoint.
    add(-q1, q1, -q1, q1);
    add(-q1, q1, q1, q3);
    add(-q1, q1, -q3, -q1);
    add(-q3, -q1, -q1, q1);
    add(q1, q3, -q1, q1);
    // Eight 1/4-squares flanking the edge squares.
    add(-q1, zero, q3, one);
    add(zero, q1, q3, one);
    add(-q1, zero, -one, -q3);
    add(zero, q1, -one, -q3);
    add(-one, -q3, zero, q1);
    add(-one, -q3, -q1, zero);
    add(q3, one, zero, q1);
    add(q3, one, -q1, zero);
    return t;
}

// ---------------------------------------------------------------------------
// Random corpora
// ---------------------------------------------------------------------------

namespace {

// A cut position inside (lo, hi) on the denom-grid of the cell, preferring
// values that do not repeat coordinates already used on the axis.
Rat pick_cut(std::mt19937_64& rng, const Rat& lo, const Rat& hi, int denom,
             std::set<Rat>& used) {
    Rat cut;
    for (int attempt = 0; attempt < 8; ++attempt) {
        uint64_t j = 1 + draw(rng, static_cast<uint64_t>(denom - 1));
        cut = lo + (hi - lo) * Rat(Int(j), Int(denom));
        if (!used.count(cut)) break;
    }
    used.insert(cut);
    return cut;
}

void split_rect(std::mt19937_64& rng, const RectTile& cell, int depth, int denom,
                std::set<Rat>& used_x, std::set<Rat>& used_y,
                std::vector<RectTile>& out) {
    if (depth == 0) {
        out.push_back(cell);
        return;
    }
    if (draw(rng, 2) == 0) {
        Rat cut = pick_cut(rng, cell.x0, cell.x1, denom, used_x);
        split_rect(rng, {cell.x0, cut, cell.y0, cell.y1, std::nullopt}, depth - 1,
                   denom, used_x, used_y, out);
        split_rect(rng, {cut, cell.x1, cell.y0, cell.y1, std::nullopt}, depth - 1,
                   denom, used_x, used_y, out);
    } else {
        Rat cut = pick_cut(rng, cell.y0, cell.y1, denom, used_y);
        split_rect(rng, {cell.x0, cell.x1, cell.y0, cut, std::nullopt}, depth - 1,
                   denom, used_x, used_y, out);
        split_rect(rng, {cell.x0, cell.x1, cut, cell.y1, std::nullopt}, depth - 1,
                   denom, used_x, used_y, out);
    }
}

} // namespace

RectTiling random_guillotine_rect(uint64_t seed, int depth, int denom) {
    require(depth >= 0, "random_guillotine_rect: depth must be >= 0");
    require(denom >= 2, "random_guillotine_rect: denom must be >= 2");
    std::mt19937_64 rng(seed);
    RectTiling t;
    t.region = {Rat(0), Rat(1), Rat(0), Rat(1)};
    std::set<Rat> used_x{Rat(0), Rat(1)}, used_y{Rat(0), Rat(1)};
    split_rect(rng, {Rat(0), Rat(1), Rat(0), Rat(1), std::nullopt}, depth, denom,
               used_x, used_y, t.tiles);
    return t;
}

namespace {

void split_box(std::mt19937_64& rng, const Box& cell, int depth, int denom,
               std::vector<std::set<Rat>>& used, std::vector<CuboidTile>& out) {
    if (depth == 0) {
        out.push_back({cell, std::nullopt});
        return;
    }
    size_t ax = draw(rng, cell.dim());
    Rat cut = pick_cut(rng, cell.lo[ax], cell.hi[ax], denom, used[ax]);
    Box a = cell, b = cell;
    a.hi[ax] = cut;
    b.lo[ax] = cut;
    split_box(rng, a, depth - 1, denom, used, out);
    split_box(rng, b, depth - 1, denom, used, out);
}

} // namespace

CuboidTiling random_guillotine_cuboid(int d, uint64_t seed, int depth, int denom) {
    require(d >= 2, "random_guillotine_cuboid: d must be >= 2");
    require(depth >= 0, "random_guillotine_cuboid: depth must be >= 0");
    require(denom >= 2, "random_guillotine_cuboid: denom must be >= 2");
    std::mt19937_64 rng(seed);
    CuboidTiling t;
    t.region.lo.assign(d, Rat(0));
    t.region.hi.assign(d, Rat(1));
    std::vector<std::set<Rat>> used(d, std::set<Rat>{Rat(0), Rat(1)});
    split_box(rng, t.region, depth, denom, used, t.tiles);
    return t;
}

namespace {

void split_tri_at(std::vector<TriTile>& tiles, size_t idx) {
    TriTile tile = tiles[idx];
    Rat h = tile.c / Rat(2);
    tiles[idx] = {tile.a, tile.b, h};
    tiles.push_back({tile.a + h, tile.b, h});
    tiles.push_back({tile.a, tile.b + h, h});
    tiles.push_back({tile.a + h, tile.b + h, -h});
}

} // namespace

TriTiling random_guillotine_tri(uint64_t seed, int depth) {
    require(depth >= 0, "random_guillotine_tri: depth must be >= 0");
    std::mt19937_64 rng(seed);
    TriTiling t;
    t.region = TriangleRegion{Rat(0), Rat(0), Rat(1)};
    t.tiles.push_back({Rat(0), Rat(0), Rat(1)});
    for (int k = 0; k < depth; ++k) split_tri_at(t.tiles, draw(rng, t.tiles.size()));
    return t;
}

namespace {

RatioPQ random_coprime_ratio(std::mt19937_64& rng, int max_entry) {
    for (;;) {
        Int p = Int(1 + draw(rng, static_cast<uint64_t>(max_entry)));
        Int q = Int(1 + draw(rng, static_cast<uint64_t>(max_entry)));
        if (boost::multiprecision::gcd(p, q) == 1) return {p, q};
    }
}

RectTiling build_ratio_tree(std::mt19937_64& rng, int leaves, int max_entry) {
    if (leaves == 1) {
        RatioPQ r = random_coprime_ratio(rng, max_entry);
        RectTiling t;
        t.region = {Rat(0), Rat(r.q), Rat(0), Rat(r.p)};
        t.tiles.push_back({Rat(0), Rat(r.q), Rat(0), Rat(r.p), r});
        return t;
    }
    int left = 1 + static_cast<int>(draw(rng, static_cast<uint64_t>(leaves - 1)));
    RectTiling a = build_ratio_tree(rng, left, max_entry);
    RectTiling b = build_ratio_tree(rng, leaves - left, max_entry);
    RectTiling out;
    if (draw(rng, 2) == 0) {
        // Side by side: rescale b to a's height.
        Rat f = a.region.height() / b.region.height();
        b = scale_translate(b, f, a.region.width(), Rat(0));
        out.region = {Rat(0), b.region.x1, Rat(0), a.region.height()};
    } else {
        // Stacked: rescale b to a's width.
        Rat f = a.region.width() / b.region.width();
        b = scale_translate(b, f, Rat(0), a.region.height());
        out.region = {Rat(0), a.region.width(), Rat(0), b.region.y1};
    }
    out.tiles = a.tiles;
    out.tiles.insert(out.tiles.end(), b.tiles.begin(), b.tiles.end());
    return out;
}

} // namespace

RectTiling random_ratio_guillotine(uint64_t seed, int leaves, int max_entry) {
    require(leaves >= 1, "random_ratio_guillotine: leaves must be >= 1");
    require(max_entry >= 1, "random_ratio_guillotine: max_entry must be >= 1");
    std::mt19937_64 rng(seed);
    return build_ratio_tree(rng, leaves, max_entry);
}

TriTiling trapezoid_strip_tiling(int base, int height) {
    require(base >= 2 && height >= 1 && height < base,
            "trapezoid_strip_tiling: need base > height >= 1");
    TriTiling t;
    t.region = TrapezoidRegion{Rat(0), Rat(0), Rat(base), Rat(base - height),
                               Rat(height)};
    for (int j = 0; j < height; ++j) {
        int row = base - j;
        for (int x = 0; x < row; ++x) t.tiles.push_back({Rat(x), Rat(j), Rat(1)});
        for (int x = 1; x < row; ++x) t.tiles.push_back({Rat(x), Rat(j + 1), Rat(-1)});
    }
    return t;
}

TriTiling parallelogram_strip_tiling(int p, int q) {
    require(p >= 1 && q >= 1, "parallelogram_strip_tiling: sides must be >= 1");
    TriTiling t;
    t.region = ParallelogramRegion{Rat(0), Rat(0), Rat(p), Rat(q)};
    for (int j = 0; j < q; ++j)
        for (int x = 0; x < p; ++x) {
            t.tiles.push_back({Rat(x), Rat(j), Rat(1)});
            t.tiles.push_back({Rat(x + 1), Rat(j + 1), Rat(-1)});
        }
    return t;
}

namespace {

TriTiling shrink_and_split(std::mt19937_64& rng, TriTiling t, int splits) {
    for (int k = 0; k < splits; ++k) split_tri_at(t.tiles, draw(rng, t.tiles.size()));
    Rat f(1, Int(1 + draw(rng, 4)));
    return scale_translate(t, f, Rat(0), Rat(0));
}

} // namespace

TriTiling random_trapezoid_tiling(uint64_t seed, int splits) {
    require(splits >= 0, "random_trapezoid_tiling: splits must be >= 0");
    std::mt19937_64 rng(seed);
    int base = 2 + static_cast<int>(draw(rng, 3));
    int height = 1 + static_cast<int>(draw(rng, static_cast<uint64_t>(base - 1)));
    return shrink_and_split(rng, trapezoid_strip_tiling(base, height), splits);
}

TriTiling random_parallelogram_tiling(uint64_t seed, int splits) {
    require(splits >= 0, "random_parallelogram_tiling: splits must be >= 0");
    std::mt19937_64 rng(seed);
    int p = 1 + static_cast<int>(draw(rng, 3));
    int q = 1 + static_cast<int>(draw(rng, 3));
    return shrink_and_split(rng, parallelogram_strip_tiling(p, q), splits);
}

} // namespace tilescale
