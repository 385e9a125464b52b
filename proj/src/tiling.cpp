#include "tilescale/tiling.hpp"

#include <optional>
#include <sstream>

namespace tilescale {

namespace {

std::string idx2(const char* what, size_t i, size_t j) {
    std::ostringstream os;
    os << what << ": tiles " << i << " and " << j;
    return os.str();
}

// Closed bounds on u, v and s = u+v; absent optional = unbounded.
struct ObliqueBounds {
    std::optional<Rat> u_lo, u_hi, v_lo, v_hi, s_lo, s_hi;

    bool contains(const Rat& u, const Rat& v) const {
        if (u_lo && u < *u_lo) return false;
        if (u_hi && u > *u_hi) return false;
        if (v_lo && v < *v_lo) return false;
        if (v_hi && v > *v_hi) return false;
        Rat s = u + v;
        if (s_lo && s < *s_lo) return false;
        if (s_hi && s > *s_hi) return false;
        return true;
    }
};

ObliqueBounds region_bounds(const TriRegion& r) {
    ObliqueBounds b;
    if (const auto* tr = std::get_if<TriangleRegion>(&r)) {
        b.u_lo = tr->a;
        b.v_lo = tr->b;
        b.s_hi = tr->a + tr->b + tr->side;
    } else if (const auto* tz = std::get_if<TrapezoidRegion>(&r)) {
        b.u_lo = tz->a;
        b.v_lo = tz->b;
        b.v_hi = tz->b + tz->height;
        b.s_hi = tz->a + tz->b + tz->base;
    } else {
        const auto& pg = std::get<ParallelogramRegion>(r);
        b.u_lo = pg.a;
        b.u_hi = pg.a + pg.p;
        b.v_lo = pg.b;
        b.v_hi = pg.b + pg.q;
    }
    return b;
}

void add_tile_interior(ObliqueBounds& b, const TriTile& t) {
    auto raise = [](std::optional<Rat>& lo, const Rat& v) {
        if (!lo || *lo < v) lo = v;
    };
    auto lower = [](std::optional<Rat>& hi, const Rat& v) {
        if (!hi || v < *hi) hi = v;
    };
    Rat s = t.a + t.b + t.c;
    if (t.c.is_positive()) {
        raise(b.u_lo, t.a);
        raise(b.v_lo, t.b);
        lower(b.s_hi, s);
    } else {
        lower(b.u_hi, t.a);
        lower(b.v_hi, t.b);
        raise(b.s_lo, s);
    }
}

// Is the open set given by the strict versions of the bounds nonempty?
// Feasible iff the open box in (u,v) is nonempty and the set of sums u+v it
// achieves, the open interval (u_lo+v_lo, u_hi+v_hi), meets (s_lo, s_hi).
bool strictly_feasible(const ObliqueBounds& b) {
    if (b.u_lo && b.u_hi && !(*b.u_lo < *b.u_hi)) return false;
    if (b.v_lo && b.v_hi && !(*b.v_lo < *b.v_hi)) return false;
    std::optional<Rat> lo = b.s_lo, hi = b.s_hi;
    if (b.u_lo && b.v_lo) {
        Rat m = *b.u_lo + *b.v_lo;
        if (!lo || *lo < m) lo = m;
    }
    if (b.u_hi && b.v_hi) {
        Rat m = *b.u_hi + *b.v_hi;
        if (!hi || m < *hi) hi = m;
    }
    if (lo && hi && !(*lo < *hi)) return false;
    return true;
}

bool tri_interiors_intersect(const TriTile& s, const TriTile& t) {
    ObliqueBounds b;
    add_tile_interior(b, s);
    add_tile_interior(b, t);
    return strictly_feasible(b);
}

} // namespace

Rat Box::volume() const {
    Rat v(1);
    for (size_t i = 0; i < dim(); ++i) v *= side(i);
    return v;
}

Rat tri_region_psi_area(const TriRegion& r) {
    if (const auto* tr = std::get_if<TriangleRegion>(&r))
        return tr->side * tr->side / Rat(2);
    if (const auto* tz = std::get_if<TrapezoidRegion>(&r))
        return tz->height * tz->base - tz->height * tz->height / Rat(2);
    const auto& pg = std::get<ParallelogramRegion>(r);
    return pg.p * pg.q;
}

// ---------------------------------------------------------------------------
// Structure checks
// ---------------------------------------------------------------------------

void check_structure(const RectTiling& t) {
    auto check_rect = [](const Rat& x0, const Rat& x1, const Rat& y0,
                         const Rat& y1, const std::string& what) {
        if (!(x0 < x1) || !(y0 < y1))
            throw std::invalid_argument(what + ": degenerate extent");
    };
    check_rect(t.region.x0, t.region.x1, t.region.y0, t.region.y1, "region");
    for (size_t i = 0; i < t.tiles.size(); ++i) {
        const RectTile& tile = t.tiles[i];
        std::string what = "tile " + std::to_string(i);
        check_rect(tile.x0, tile.x1, tile.y0, tile.y1, what);
        if (tile.ratio) {
            const auto& r = *tile.ratio;
            if (r.p <= 0 || r.q <= 0)
                throw std::invalid_argument(what + ": ratio entries must be positive");
            if (boost::multiprecision::gcd(r.p, r.q) != 1)
                throw std::invalid_argument(what + ": ratio not in lowest terms");
            if (tile.height() * Rat(r.q) != tile.width() * Rat(r.p))
                throw std::invalid_argument(what + ": declared ratio does not match tile");
        }
    }
}

void check_structure(const CuboidTiling& t) {
    size_t d = t.region.dim();
    if (d < 2) throw std::invalid_argument("region: dimension must be >= 2");
    if (t.region.hi.size() != d)
        throw std::invalid_argument("region: lo/hi length mismatch");
    auto check_box = [d](const Box& b, const std::string& what) {
        if (b.lo.size() != d || b.hi.size() != d)
            throw std::invalid_argument(what + ": dimension mismatch");
        for (size_t a = 0; a < d; ++a)
            if (!(b.lo[a] < b.hi[a]))
                throw std::invalid_argument(what + ": degenerate extent");
    };
    check_box(t.region, "region");
    for (size_t i = 0; i < t.tiles.size(); ++i) {
        std::string what = "tile " + std::to_string(i);
        check_box(t.tiles[i].box, what);
        if (t.tiles[i].shape) {
            const auto& s = *t.tiles[i].shape;
            if (s.size() != d)
                throw std::invalid_argument(what + ": shape length mismatch");
            for (const Int& e : s)
                if (e <= 0)
                    throw std::invalid_argument(what + ": shape entries must be positive");
            // Sides must be exact multiples of one common factor of the shape.
            for (size_t a = 1; a < d; ++a)
                if (t.tiles[i].box.side(0) * Rat(s[a]) !=
                    t.tiles[i].box.side(a) * Rat(s[0]))
                    throw std::invalid_argument(what + ": sides not proportional to shape");
        }
    }
}

void check_structure(const TriTiling& t) {
    std::visit(
        [](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, TriangleRegion>) {
                if (!r.side.is_positive())
                    throw std::invalid_argument("region: side must be positive");
            } else if constexpr (std::is_same_v<T, TrapezoidRegion>) {
                if (!r.base.is_positive() || !r.top.is_positive() ||
                    !r.height.is_positive())
                    throw std::invalid_argument("region: trapezoid dimensions must be positive");
                if (r.base != r.top + r.height)
                    throw std::invalid_argument(
                        "region: trapezoid legs must be at 60 degrees (base = top + height)");
            } else {
                if (!r.p.is_positive() || !r.q.is_positive())
                    throw std::invalid_argument("region: parallelogram sides must be positive");
            }
        },
        t.region);
    for (size_t i = 0; i < t.tiles.size(); ++i)
        if (t.tiles[i].c.is_zero())
            throw std::invalid_argument("tile " + std::to_string(i) + ": c must be nonzero");
}

// ---------------------------------------------------------------------------
// Validators
// ---------------------------------------------------------------------------

ValidationReport validate(const RectTiling& t) {
    check_structure(t);
    ValidationReport rep;
    for (size_t i = 0; i < t.tiles.size() && rep.containment_ok; ++i) {
        const RectTile& a = t.tiles[i];
        if (a.x0 < t.region.x0 || a.x1 > t.region.x1 || a.y0 < t.region.y0 ||
            a.y1 > t.region.y1) {
            rep.containment_ok = false;
            rep.detail = "containment: tile " + std::to_string(i) + " leaves the region";
        }
    }
    for (size_t i = 0; i < t.tiles.size() && rep.disjoint_ok; ++i)
        for (size_t j = i + 1; j < t.tiles.size() && rep.disjoint_ok; ++j) {
            const RectTile& a = t.tiles[i];
            const RectTile& b = t.tiles[j];
            if (a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1) {
                rep.disjoint_ok = false;
                if (rep.detail.empty()) rep.detail = idx2("overlap", i, j);
            }
        }
    Rat sum(0);
    for (const RectTile& a : t.tiles) sum += a.area();
    if (sum != t.region.area()) {
        rep.area_ok = false;
        if (rep.detail.empty())
            rep.detail = "area: tiles sum to " + sum.str() + ", region has " +
                         t.region.area().str();
    }
    return rep;
}

ValidationReport validate(const CuboidTiling& t) {
    check_structure(t);
    size_t d = t.region.dim();
    ValidationReport rep;
    for (size_t i = 0; i < t.tiles.size() && rep.containment_ok; ++i) {
        const Box& a = t.tiles[i].box;
        for (size_t ax = 0; ax < d; ++ax)
            if (a.lo[ax] < t.region.lo[ax] || a.hi[ax] > t.region.hi[ax]) {
                rep.containment_ok = false;
                rep.detail = "containment: tile " + std::to_string(i) + " leaves the region";
                break;
            }
    }
    for (size_t i = 0; i < t.tiles.size() && rep.disjoint_ok; ++i)
        for (size_t j = i + 1; j < t.tiles.size() && rep.disjoint_ok; ++j) {
            const Box& a = t.tiles[i].box;
            const Box& b = t.tiles[j].box;
            bool overlap = true;
            for (size_t ax = 0; ax < d && overlap; ++ax)
                overlap = a.lo[ax] < b.hi[ax] && b.lo[ax] < a.hi[ax];
            if (overlap) {
                rep.disjoint_ok = false;
                if (rep.detail.empty()) rep.detail = idx2("overlap", i, j);
            }
        }
    Rat sum(0);
    for (const CuboidTile& a : t.tiles) sum += a.box.volume();
    if (sum != t.region.volume()) {
        rep.area_ok = false;
        if (rep.detail.empty())
            rep.detail = "volume: tiles sum to " + sum.str() + ", region has " +
                         t.region.volume().str();
    }
    return rep;
}

ValidationReport validate(const TriTiling& t) {
    check_structure(t);
    ValidationReport rep;
    ObliqueBounds region = region_bounds(t.region);
    for (size_t i = 0; i < t.tiles.size() && rep.containment_ok; ++i) {
        const TriTile& a = t.tiles[i];
        if (!region.contains(a.a, a.b) || !region.contains(a.a + a.c, a.b) ||
            !region.contains(a.a, a.b + a.c)) {
            rep.containment_ok = false;
            rep.detail = "containment: tile " + std::to_string(i) + " leaves the region";
        }
    }
    for (size_t i = 0; i < t.tiles.size() && rep.disjoint_ok; ++i)
        for (size_t j = i + 1; j < t.tiles.size() && rep.disjoint_ok; ++j)
            if (tri_interiors_intersect(t.tiles[i], t.tiles[j])) {
                rep.disjoint_ok = false;
                if (rep.detail.empty()) rep.detail = idx2("overlap", i, j);
            }
    Rat sum(0);
    for (const TriTile& a : t.tiles) sum += a.psi_area();
    if (sum != tri_region_psi_area(t.region)) {
        rep.area_ok = false;
        if (rep.detail.empty())
            rep.detail = "area: tiles sum to " + sum.str() + ", region has " +
                         tri_region_psi_area(t.region).str();
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Side lengths
// ---------------------------------------------------------------------------

std::vector<std::array<Rat, 2>> side_lengths(const RectTiling& t) {
    std::vector<std::array<Rat, 2>> out;
    out.reserve(t.tiles.size());
    for (const RectTile& a : t.tiles) out.push_back({a.width(), a.height()});
    return out;
}

std::vector<std::vector<Rat>> side_lengths(const CuboidTiling& t) {
    std::vector<std::vector<Rat>> out;
    out.reserve(t.tiles.size());
    for (const CuboidTile& a : t.tiles) {
        std::vector<Rat> s;
        for (size_t ax = 0; ax < a.box.dim(); ++ax) s.push_back(a.box.side(ax));
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Rat> side_lengths(const TriTiling& t) {
    std::vector<Rat> out;
    out.reserve(t.tiles.size());
    for (const TriTile& a : t.tiles) out.push_back(a.side());
    return out;
}

std::vector<Rat> all_side_values(const RectTiling& t) {
    std::vector<Rat> out;
    for (const RectTile& a : t.tiles) {
        out.push_back(a.width());
        out.push_back(a.height());
    }
    return out;
}

std::vector<Rat> all_side_values(const CuboidTiling& t) {
    std::vector<Rat> out;
    for (const CuboidTile& a : t.tiles)
        for (size_t ax = 0; ax < a.box.dim(); ++ax) out.push_back(a.box.side(ax));
    return out;
}

std::vector<Rat> all_side_values(const TriTiling& t) { return side_lengths(t); }

// ---------------------------------------------------------------------------
// Transforms
// ---------------------------------------------------------------------------

namespace {
void require_positive_factor(const Rat& f) {
    if (!f.is_positive())
        throw std::invalid_argument("scale_translate: factor must be positive");
}
} // namespace

RectTiling scale_translate(const RectTiling& t, const Rat& factor, const Rat& dx,
                           const Rat& dy) {
    require_positive_factor(factor);
    auto map_x = [&](const Rat& x) { return factor * x + dx; };
    auto map_y = [&](const Rat& y) { return factor * y + dy; };
    RectTiling out;
    out.region = {map_x(t.region.x0), map_x(t.region.x1), map_y(t.region.y0),
                  map_y(t.region.y1)};
    out.tiles.reserve(t.tiles.size());
    for (const RectTile& a : t.tiles)
        out.tiles.push_back(
            {map_x(a.x0), map_x(a.x1), map_y(a.y0), map_y(a.y1), a.ratio});
    return out;
}

CuboidTiling scale_translate(const CuboidTiling& t, const Rat& factor,
                             std::span<const Rat> offset) {
    require_positive_factor(factor);
    size_t d = t.region.dim();
    if (offset.size() != d)
        throw std::invalid_argument("scale_translate: offset dimension mismatch");
    auto map_box = [&](const Box& b) {
        Box out;
        out.lo.reserve(d);
        out.hi.reserve(d);
        for (size_t ax = 0; ax < d; ++ax) {
            out.lo.push_back(factor * b.lo[ax] + offset[ax]);
            out.hi.push_back(factor * b.hi[ax] + offset[ax]);
        }
        return out;
    };
    CuboidTiling out;
    out.region = map_box(t.region);
    out.tiles.reserve(t.tiles.size());
    for (const CuboidTile& a : t.tiles) out.tiles.push_back({map_box(a.box), a.shape});
    return out;
}

TriTiling scale_translate(const TriTiling& t, const Rat& factor, const Rat& da,
                          const Rat& db) {
    require_positive_factor(factor);
    TriTiling out;
    out.region = std::visit(
        [&](const auto& r) -> TriRegion {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, TriangleRegion>)
                return TriangleRegion{factor * r.a + da, factor * r.b + db,
                                      factor * r.side};
            else if constexpr (std::is_same_v<T, TrapezoidRegion>)
                return TrapezoidRegion{factor * r.a + da, factor * r.b + db,
                                       factor * r.base, factor * r.top,
                                       factor * r.height};
            else
                return ParallelogramRegion{factor * r.a + da, factor * r.b + db,
                                           factor * r.p, factor * r.q};
        },
        t.region);
    out.tiles.reserve(t.tiles.size());
    for (const TriTile& a : t.tiles)
        out.tiles.push_back({factor * a.a + da, factor * a.b + db, factor * a.c});
    return out;
}

RectTiling transpose(const RectTiling& t) {
    RectTiling out;
    out.region = {t.region.y0, t.region.y1, t.region.x0, t.region.x1};
    out.tiles.reserve(t.tiles.size());
    for (const RectTile& a : t.tiles) {
        std::optional<RatioPQ> r = a.ratio;
        if (r) std::swap(r->p, r->q);
        out.tiles.push_back({a.y0, a.y1, a.x0, a.x1, r});
    }
    return out;
}

RectTiling normalize_rect(const RectTiling& t) {
    const RectTiling& base = t;
    RectTiling oriented =
        base.region.width() > base.region.height() ? transpose(base) : base;
    Rat s = Rat(1) / oriented.region.height();
    return scale_translate(oriented, s, -s * oriented.region.x0,
                           -s * oriented.region.y0);
}

TriTiling rotate_tri_120(const TriTiling& t) {
    const auto* tr = std::get_if<TriangleRegion>(&t.region);
    if (!tr || !tr->a.is_zero() || !tr->b.is_zero() || tr->side != Rat(1))
        throw std::invalid_argument("rotate_tri_120: region must be T(0,0,1)");
    TriTiling out;
    out.region = t.region;
    out.tiles.reserve(t.tiles.size());
    for (const TriTile& a : t.tiles)
        out.tiles.push_back({Rat(1) - a.a - a.b - a.c, a.a, a.c});
    return out;
}

} // namespace tilescale
