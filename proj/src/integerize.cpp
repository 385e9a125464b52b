#include "tilescale/integerize.hpp"

#include <algorithm>
#include <set>

namespace tilescale {

namespace {

void reject_half(const Rat& x) {
    if (x.frac_is_half())
        throw PreconditionViolation("coordinate " + x.str() +
                                    " has fractional part 1/2");
}

void reject_far(const Rat& x) {
    Rat d = nearest_int_distance(x);
    if (!(d < Rat(1, 4)))
        throw PreconditionViolation("coordinate " + x.str() + " is at distance " +
                                    d.str() + " >= 1/4 from the nearest integer");
}

void require_valid(const ValidationReport& rep, const std::string& who) {
    if (!rep.pass())
        throw std::invalid_argument(who + ": invalid tiling (" + rep.detail + ")");
}

std::set<Rat> rect_coord_values(const RectTiling& t) {
    std::set<Rat> s;
    for (const RectTile& a : t.tiles) {
        s.insert(a.x0);
        s.insert(a.x1);
        s.insert(a.y0);
        s.insert(a.y1);
    }
    return s;
}

Int as_integer(const Rat& x, const std::string& what) {
    if (!x.is_integer())
        throw CertificationFailure(what + ": expected an integer, got " + x.str());
    return x.num();
}

} // namespace

// ---------------------------------------------------------------------------
// Counting
// ---------------------------------------------------------------------------

Int count_half_shifted(const Rat& lo, const Rat& hi) {
    if (!(lo < hi))
        throw std::invalid_argument("count_half_shifted: empty interval");
    reject_half(lo);
    reject_half(hi);
    return round_nearest(hi) - round_nearest(lo);
}

bool check_balanced_lines_square(const RectTile& tile) {
    if (!(tile.x0 < tile.x1) || !(tile.y0 < tile.y1))
        throw std::invalid_argument("check_balanced_lines_square: degenerate tile");
    if (!tile.is_square())
        throw PreconditionViolation("tile is not a square");
    for (const Rat& c : {tile.x0, tile.x1, tile.y0, tile.y1}) reject_far(c);
    Int v = count_half_shifted(tile.x0, tile.x1);
    Int h = count_half_shifted(tile.y0, tile.y1);
    return v == h;
}

TriGridLineCount count_half_shifted_diag(const TriTile& tile) {
    if (tile.c.is_zero())
        throw std::invalid_argument("count_half_shifted_diag: degenerate tile");
    for (const Rat& c : {tile.a, tile.a + tile.c, tile.b, tile.b + tile.c})
        reject_half(c);
    Int diag = round_nearest(tile.a + tile.c) - round_nearest(tile.a);
    Int h = round_nearest(tile.b + tile.c) - round_nearest(tile.b);
    return {diag < 0 ? Int(-diag) : diag, h < 0 ? Int(-h) : h};
}

// ---------------------------------------------------------------------------
// Aspect ratio / flow diagnostics
// ---------------------------------------------------------------------------

AspectRatioReport dehn_aspect_ratio(const RectTiling& t) {
    require_valid(validate(t), "dehn_aspect_ratio");
    for (size_t i = 0; i < t.tiles.size(); ++i)
        if (!t.tiles[i].is_square())
            throw std::invalid_argument("dehn_aspect_ratio: tile " +
                                        std::to_string(i) + " is not a square");
    AspectRatioReport rep;
    for (const Rat& c : rect_coord_values(t))
        if (c.frac_is_half()) {
            rep.violation = "vertex coordinate " + c.str() + " has fractional part 1/2";
            return rep;
        }
    rep.vertex_free = true;
    rep.v = count_half_shifted(t.region.x0, t.region.x1);
    rep.h = count_half_shifted(t.region.y0, t.region.y1);
    if (rep.v < 1) {
        rep.violation = "no half-shifted vertical grid line meets the region";
        return rep;
    }
    rep.vertical_line_hits_region = true;
    for (size_t i = 0; i < t.tiles.size(); ++i) {
        const RectTile& a = t.tiles[i];
        if (count_half_shifted(a.x0, a.x1) != count_half_shifted(a.y0, a.y1)) {
            rep.violation = "tile " + std::to_string(i) + " has unbalanced line counts";
            return rep;
        }
    }
    rep.balanced = true;
    rep.ratio = Rat(rep.h) / Rat(rep.v);
    if (Rat(rep.v) * t.region.height() != Rat(rep.h) * t.region.width())
        throw CertificationFailure(
            "dehn_aspect_ratio: v*height != h*width on a tiling meeting all conditions");
    return rep;
}

FlowCheckReport rfunction_flow_check(const RectTiling& t,
                                     const std::function<Rat(const Rat&)>& r) {
    check_structure(t);
    if (r(t.region.y0) != t.region.y0 || r(t.region.y1) != t.region.y1)
        throw PreconditionViolation(
            "rfunction_flow_check: r does not fix the region y-coordinates");
    FlowCheckReport rep;
    for (size_t i = 0; i < t.tiles.size(); ++i) {
        const RectTile& a = t.tiles[i];
        Rat lhs = a.width() * (r(a.y1) - r(a.y0));
        Rat rhs = (r(a.x1) - r(a.x0)) * a.height();
        if (lhs != rhs) rep.hypothesis_failures.push_back(i);
    }
    if (rep.hypothesis_failures.empty()) {
        rep.conclusion_checked = true;
        for (size_t i = 0; i < t.tiles.size(); ++i) {
            const RectTile& a = t.tiles[i];
            if (r(a.y0) != a.y0 || r(a.y1) != a.y1)
                rep.conclusion_failures.push_back(i);
        }
    }
    return rep;
}

std::vector<Int> almost_integer_snap(const RectTiling& t) {
    require_valid(validate(t), "almost_integer_snap");
    for (size_t i = 0; i < t.tiles.size(); ++i)
        if (!t.tiles[i].is_square())
            throw std::invalid_argument("almost_integer_snap: tile " +
                                        std::to_string(i) + " is not a square");
    const RectTiling* work = &t;
    RectTiling transposed;
    if (!t.region.y0.is_integer() || !t.region.y1.is_integer()) {
        if (t.region.x0.is_integer() && t.region.x1.is_integer()) {
            transposed = transpose(t);
            work = &transposed;
        } else {
            throw PreconditionViolation(
                "almost_integer_snap: region has no integer-coordinate opposite side pair");
        }
    }
    for (const Rat& c : rect_coord_values(*work)) reject_far(c);
    std::vector<Int> sides;
    sides.reserve(work->tiles.size());
    for (const RectTile& a : work->tiles) {
        Int cnt = count_half_shifted(a.y0, a.y1);
        if (Rat(cnt) != a.height())
            throw CertificationFailure(
                "almost_integer_snap: side " + a.height().str() +
                " does not equal its horizontal-line count " + cnt.str());
        sides.push_back(cnt);
    }
    return sides;
}

// ---------------------------------------------------------------------------
// PaperBound
// ---------------------------------------------------------------------------

bool PaperBound::satisfied_by(const Rat& value) const {
    if (!value.is_positive()) return true;
    unsigned long ed = exp_den.convert_to<unsigned long>();
    unsigned long en = exp_num.convert_to<unsigned long>();
    // value <= coeff * base^(en/ed)  <=>  num^ed <= den^ed * coeff^ed * base^en
    Int lhs = ipow(value.num(), ed);
    Int rhs = ipow(value.den(), ed) * ipow(coeff, ed) * ipow(base, en);
    return lhs <= rhs;
}

std::string PaperBound::str() const {
    std::string e = exp_num % exp_den == 0
                        ? Int(exp_num / exp_den).str()
                        : "(" + exp_num.str() + "/" + exp_den.str() + ")";
    std::string p = base.str() + "^" + e;
    return coeff == 1 ? p : coeff.str() + "*" + p;
}

// ---------------------------------------------------------------------------
// Square pipeline
// ---------------------------------------------------------------------------

SquareScaleCert integerize_square_tiling(const RectTiling& t) {
    require_valid(validate(t), "integerize_square_tiling");
    for (size_t i = 0; i < t.tiles.size(); ++i)
        if (!t.tiles[i].is_square())
            throw std::invalid_argument("integerize_square_tiling: tile " +
                                        std::to_string(i) + " is not a square");
    size_t n = t.tiles.size();
    RectTiling norm = normalize_rect(t);
    std::set<Rat> s = rect_coord_values(norm);
    s.erase(Rat(0));
    s.erase(Rat(1));
    if (s.size() > n)
        throw CertificationFailure("integerize_square_tiling: |S| > n");
    std::vector<Rat> values(s.begin(), s.end());
    ApproxResult ar = dirichlet(values, 4);

    SquareScaleCert cert;
    cert.q = ar.q;
    cert.bound = PaperBound{1, 4, Int(n), 1};
    cert.scaled = scale_translate(norm, Rat(ar.q), Rat(0), Rat(0));
    cert.sides = almost_integer_snap(cert.scaled);
    if (!cert.bound.satisfied_by(Rat(cert.q)))
        throw CertificationFailure("integerize_square_tiling: q exceeds " +
                                   cert.bound.str());
    if (cert.scaled.region.height() != Rat(cert.q))
        throw CertificationFailure(
            "integerize_square_tiling: scaled longest side differs from q");
    require_valid(validate(cert.scaled), "integerize_square_tiling(scaled)");
    return cert;
}

// ---------------------------------------------------------------------------
// Rectangle-with-ratio pipeline
// ---------------------------------------------------------------------------

RectScaleCert integerize_rect_tiling(const RectTiling& t) {
    require_valid(validate(t), "integerize_rect_tiling");
    for (size_t i = 0; i < t.tiles.size(); ++i)
        if (!t.tiles[i].ratio)
            throw std::invalid_argument("integerize_rect_tiling: tile " +
                                        std::to_string(i) + " has no declared ratio");
    size_t n = t.tiles.size();
    RectTiling norm = normalize_rect(t);

    std::set<Rat> s0 = rect_coord_values(norm);
    s0.erase(Rat(0));
    s0.erase(Rat(1));
    if (s0.size() > n)
        throw CertificationFailure("integerize_rect_tiling: |S0| > n");

    std::vector<ApproxGroup> groups;
    groups.push_back({std::vector<Rat>(s0.begin(), s0.end()), 4});
    Int coeff = 1;
    for (const RectTile& a : norm.tiles) {
        const RatioPQ& r = *a.ratio;
        Int mx = r.p > r.q ? r.p : r.q;
        coeff *= mx;
        groups.push_back({{a.height() / Rat(r.p)}, 2 * mx});
    }
    ApproxResult ar = dirichlet_varied(groups);

    RectScaleCert cert;
    cert.q = ar.q;
    cert.bound = PaperBound{coeff, 8, Int(n), 1};
    cert.scaled = scale_translate(norm, Rat(ar.q), Rat(0), Rat(0));
    for (size_t i = 0; i < cert.scaled.tiles.size(); ++i) {
        const RectTile& a = cert.scaled.tiles[i];
        const RatioPQ& r = *a.ratio;
        Int s = as_integer(a.height() / Rat(r.p),
                           "integerize_rect_tiling: tile " + std::to_string(i) +
                               " multiplier");
        if (s <= 0 || a.width() != Rat(s * r.q) || a.height() != Rat(s * r.p))
            throw CertificationFailure(
                "integerize_rect_tiling: tile " + std::to_string(i) +
                " sides are not an integer multiple of its ratio");
        cert.multipliers.push_back(s);
        cert.sides.push_back({s * r.q, s * r.p});
    }
    if (!cert.bound.satisfied_by(Rat(cert.q)))
        throw CertificationFailure("integerize_rect_tiling: q exceeds " +
                                   cert.bound.str());
    require_valid(validate(cert.scaled), "integerize_rect_tiling(scaled)");
    return cert;
}

// ---------------------------------------------------------------------------
// Cross sections
// ---------------------------------------------------------------------------

namespace {

std::vector<size_t> anchored_axes(size_t d, size_t i, size_t j) {
    std::vector<size_t> axes;
    for (size_t ax = 0; ax < d; ++ax)
        if (ax != i && ax != j) axes.push_back(ax);
    return axes;
}

bool tile_meets_anchor(const CuboidTile& tile, std::span<const size_t> axes,
                       std::span<const Rat> anchor) {
    for (size_t k = 0; k < axes.size(); ++k)
        if (!(tile.box.lo[axes[k]] < anchor[k] && anchor[k] < tile.box.hi[axes[k]]))
            return false;
    return true;
}

} // namespace

RectTiling cuboid_cross_section(const CuboidTiling& t, size_t i, size_t j,
                                std::span<const Rat> anchor) {
    check_structure(t);
    size_t d = t.region.dim();
    if (i >= d || j >= d || i == j)
        throw std::invalid_argument("cuboid_cross_section: bad axis pair");
    std::vector<size_t> axes = anchored_axes(d, i, j);
    if (anchor.size() != axes.size())
        throw std::invalid_argument("cuboid_cross_section: anchor size mismatch");
    for (size_t k = 0; k < axes.size(); ++k) {
        size_t ax = axes[k];
        if (!(t.region.lo[ax] < anchor[k] && anchor[k] < t.region.hi[ax]))
            throw PreconditionViolation("cuboid_cross_section: anchor " +
                                        anchor[k].str() +
                                        " misses the region on axis " +
                                        std::to_string(ax));
        for (const CuboidTile& a : t.tiles)
            if (a.box.lo[ax] == anchor[k] || a.box.hi[ax] == anchor[k])
                throw PreconditionViolation(
                    "cuboid_cross_section: anchor hits vertex coordinate " +
                    anchor[k].str() + " on axis " + std::to_string(ax));
    }
    RectTiling out;
    out.region = {t.region.lo[i], t.region.hi[i], t.region.lo[j], t.region.hi[j]};
    for (const CuboidTile& a : t.tiles)
        if (tile_meets_anchor(a, axes, anchor))
            out.tiles.push_back({a.box.lo[i], a.box.hi[i], a.box.lo[j],
                                 a.box.hi[j], std::nullopt});
    return out;
}

// ---------------------------------------------------------------------------
// Hypercube pipeline
// ---------------------------------------------------------------------------

namespace {

// One anchor value per cell between consecutive distinct coordinates of an
// axis (midpoints), spanning the whole region extent.
std::vector<Rat> axis_cell_midpoints(const CuboidTiling& t, size_t ax) {
    std::set<Rat> values{t.region.lo[ax], t.region.hi[ax]};
    for (const CuboidTile& a : t.tiles) {
        values.insert(a.box.lo[ax]);
        values.insert(a.box.hi[ax]);
    }
    std::vector<Rat> mids;
    auto it = values.begin();
    Rat prev = *it++;
    for (; it != values.end(); ++it) {
        mids.push_back((prev + *it) / Rat(2));
        prev = *it;
    }
    return mids;
}

} // namespace

CubeScaleCert integerize_hypercube_tiling(const CuboidTiling& t) {
    require_valid(validate(t), "integerize_hypercube_tiling");
    size_t d = t.region.dim();
    size_t n = t.tiles.size();
    for (size_t k = 0; k < n; ++k)
        for (size_t ax = 1; ax < d; ++ax)
            if (t.tiles[k].box.side(ax) != t.tiles[k].box.side(0))
                throw std::invalid_argument("integerize_hypercube_tiling: tile " +
                                            std::to_string(k) + " is not a hypercube");

    AxisPairReport pair = cuboid_best_axis_pair(t);
    size_t i = pair.i, j = pair.j;

    Rat s = Rat(1) / t.region.side(i);
    std::vector<Rat> offset;
    for (size_t ax = 0; ax < d; ++ax) offset.push_back(-s * t.region.lo[ax]);
    CuboidTiling norm = scale_translate(t, s, offset);

    std::set<Rat> coords;
    for (const CuboidTile& a : norm.tiles) {
        coords.insert(a.box.lo[i]);
        coords.insert(a.box.hi[i]);
        coords.insert(a.box.lo[j]);
        coords.insert(a.box.hi[j]);
    }
    coords.erase(Rat(0));
    coords.erase(Rat(1));
    // |S| <= 2(n-1)/d + 1, compared exactly.
    if (Int(coords.size()) * Int(d) > 2 * (Int(n) - 1) + Int(d))
        throw CertificationFailure("integerize_hypercube_tiling: |S| > 2(n-1)/d + 1");

    std::vector<Rat> values(coords.begin(), coords.end());
    ApproxResult ar = dirichlet(values, 4);

    CubeScaleCert cert;
    cert.q = ar.q;
    cert.axis_i = i;
    cert.axis_j = j;
    std::vector<Rat> zero(d, Rat(0));
    cert.scaled = scale_translate(norm, Rat(ar.q), zero);
    for (size_t k = 0; k < n; ++k)
        cert.sides.push_back(as_integer(cert.scaled.tiles[k].box.side(i),
                                        "integerize_hypercube_tiling: tile " +
                                            std::to_string(k) + " side"));

    // Redundant verification through plane sections: every section is a
    // square tiling whose sides are re-certified by line counting.
    cert.sections_checked = 0;
    if (d == 2) {
        RectTiling flat;
        flat.region = {cert.scaled.region.lo[0], cert.scaled.region.hi[0],
                       cert.scaled.region.lo[1], cert.scaled.region.hi[1]};
        for (const CuboidTile& a : cert.scaled.tiles)
            flat.tiles.push_back(
                {a.box.lo[0], a.box.hi[0], a.box.lo[1], a.box.hi[1], std::nullopt});
        std::vector<Int> snapped = almost_integer_snap(flat);
        if (snapped != cert.sides)
            throw CertificationFailure(
                "integerize_hypercube_tiling: section disagrees with direct sides");
        cert.sections_checked = 1;
    } else {
        std::vector<size_t> axes = anchored_axes(d, i, j);
        std::vector<std::vector<Rat>> mids;
        for (size_t ax : axes) mids.push_back(axis_cell_midpoints(cert.scaled, ax));
        std::vector<size_t> pick(axes.size(), 0);
        while (true) {
            std::vector<Rat> anchor;
            for (size_t k = 0; k < axes.size(); ++k) anchor.push_back(mids[k][pick[k]]);
            RectTiling sec = cuboid_cross_section(cert.scaled, i, j, anchor);
            require_valid(validate(sec), "integerize_hypercube_tiling(section)");
            std::vector<Int> snapped = almost_integer_snap(sec);
            std::vector<Int> expected;
            for (size_t k = 0; k < n; ++k)
                if (tile_meets_anchor(cert.scaled.tiles[k], axes, anchor))
                    expected.push_back(cert.sides[k]);
            if (snapped != expected)
                throw CertificationFailure(
                    "integerize_hypercube_tiling: section disagrees with direct sides");
            ++cert.sections_checked;
            size_t k = 0;
            while (k < pick.size() && ++pick[k] == mids[k].size()) pick[k++] = 0;
            if (k == pick.size()) break;
        }
    }

    Rat shortest = cert.scaled.region.side(0), longest = shortest;
    for (size_t ax = 1; ax < d; ++ax) {
        Rat side = cert.scaled.region.side(ax);
        if (side < shortest) shortest = side;
        if (longest < side) longest = side;
    }
    cert.shortest_bound = PaperBound{1, 4, 2 * (Int(n) - 1) + Int(d), Int(d)};
    cert.longest_bound = PaperBound{Int(n), 4, 2 * (Int(n) - 1) + Int(d), Int(d)};
    if (!cert.shortest_bound.satisfied_by(shortest))
        throw CertificationFailure("integerize_hypercube_tiling: shortest side exceeds " +
                                   cert.shortest_bound.str());
    if (!cert.longest_bound.satisfied_by(longest))
        throw CertificationFailure("integerize_hypercube_tiling: longest side exceeds " +
                                   cert.longest_bound.str());
    require_valid(validate(cert.scaled), "integerize_hypercube_tiling(scaled)");
    return cert;
}

// ---------------------------------------------------------------------------
// Hypercuboid-with-shape pipeline
// ---------------------------------------------------------------------------

CuboidScaleCert integerize_hypercuboid_tiling(const CuboidTiling& t) {
    require_valid(validate(t), "integerize_hypercuboid_tiling");
    size_t d = t.region.dim();
    size_t n = t.tiles.size();
    for (size_t k = 0; k < n; ++k)
        if (!t.tiles[k].shape)
            throw std::invalid_argument("integerize_hypercuboid_tiling: tile " +
                                        std::to_string(k) + " has no shape vector");

    // i: axis of the region's longest side (smallest index on ties);
    // j: the partner minimizing the bound factor (smallest on ties).
    size_t i = 0;
    for (size_t ax = 1; ax < d; ++ax)
        if (t.region.side(ax) > t.region.side(i)) i = ax;
    size_t j = SIZE_MAX;
    Int best_factor = 0;
    for (size_t cand = 0; cand < d; ++cand) {
        if (cand == i) continue;
        Int f = 1;
        for (const CuboidTile& a : t.tiles) {
            const Int& qi = (*a.shape)[i];
            const Int& qj = (*a.shape)[cand];
            f *= qi > qj ? qi : qj;
        }
        if (j == SIZE_MAX || f < best_factor) {
            j = cand;
            best_factor = f;
        }
    }

    Rat s = Rat(1) / t.region.side(i);
    std::vector<Rat> offset;
    for (size_t ax = 0; ax < d; ++ax) offset.push_back(-s * t.region.lo[ax]);
    CuboidTiling norm = scale_translate(t, s, offset);

    std::set<Rat> s0;
    for (const CuboidTile& a : norm.tiles) {
        s0.insert(a.box.lo[i]);
        s0.insert(a.box.hi[i]);
        s0.insert(a.box.lo[j]);
        s0.insert(a.box.hi[j]);
    }
    s0.erase(Rat(0));
    s0.erase(Rat(1));
    if (s0.size() > n)
        throw CertificationFailure("integerize_hypercuboid_tiling: |S0| > n");

    std::vector<ApproxGroup> groups;
    groups.push_back({std::vector<Rat>(s0.begin(), s0.end()), 4});
    for (const CuboidTile& a : norm.tiles) {
        const Int& qi = (*a.shape)[i];
        const Int& qj = (*a.shape)[j];
        Int mx = qi > qj ? qi : qj;
        groups.push_back({{a.box.side(i) / Rat(qi)}, 2 * mx});
    }
    ApproxResult ar = dirichlet_varied(groups);

    CuboidScaleCert cert;
    cert.q = ar.q;
    cert.axis_i = i;
    cert.axis_j = j;
    cert.bound = PaperBound{best_factor, 8, Int(n), 1};
    std::vector<Rat> zero(d, Rat(0));
    cert.scaled = scale_translate(norm, Rat(ar.q), zero);
    for (size_t k = 0; k < n; ++k) {
        const CuboidTile& a = cert.scaled.tiles[k];
        Int sk = as_integer(a.box.side(i) / Rat((*a.shape)[i]),
                            "integerize_hypercuboid_tiling: tile " +
                                std::to_string(k) + " multiplier");
        std::vector<Int> side_vec;
        for (size_t ax = 0; ax < d; ++ax) {
            Int want = sk * (*a.shape)[ax];
            if (a.box.side(ax) != Rat(want))
                throw CertificationFailure(
                    "integerize_hypercuboid_tiling: tile " + std::to_string(k) +
                    " sides are not an integer multiple of its shape");
            side_vec.push_back(want);
        }
        cert.multipliers.push_back(sk);
        cert.sides.push_back(std::move(side_vec));
    }
    if (!cert.bound.satisfied_by(Rat(cert.q)))
        throw CertificationFailure("integerize_hypercuboid_tiling: q exceeds " +
                                   cert.bound.str());
    require_valid(validate(cert.scaled), "integerize_hypercuboid_tiling(scaled)");
    return cert;
}

// ---------------------------------------------------------------------------
// Triangle pipelines
// ---------------------------------------------------------------------------

TriScaleCert integerize_triangle_tiling(const TriTiling& t) {
    require_valid(validate(t), "integerize_triangle_tiling");
    const auto* tr = std::get_if<TriangleRegion>(&t.region);
    if (!tr)
        throw std::invalid_argument(
            "integerize_triangle_tiling: region is not a triangle; use "
            "integerize_trapezoid_or_parallelogram");
    size_t n = t.tiles.size();
    Rat s = Rat(1) / tr->side;
    TriTiling norm = scale_translate(t, s, -s * tr->a, -s * tr->b);

    RotationReport rot = tri_best_rotation(norm);
    if (!rot.pass)
        throw CertificationFailure(
            "integerize_triangle_tiling: rotation coordinate bound violated");
    ApproxResult ar = dirichlet(rot.coords, 4);

    TriScaleCert cert;
    cert.q = ar.q;
    cert.rotation = rot.rotation;
    cert.bound = PaperBound{1, 4, 2 * Int(n) - 2, 3};
    cert.scaled = scale_translate(rot.rotated, Rat(ar.q), Rat(0), Rat(0));
    for (size_t k = 0; k < n; ++k) {
        Int side = as_integer(cert.scaled.tiles[k].side(),
                              "integerize_triangle_tiling: tile " +
                                  std::to_string(k) + " side");
        if (side <= 0)
            throw CertificationFailure("integerize_triangle_tiling: nonpositive side");
        cert.sides.push_back(side);
    }
    if (!cert.bound.satisfied_by(Rat(cert.q)))
        throw CertificationFailure("integerize_triangle_tiling: q exceeds " +
                                   cert.bound.str());
    require_valid(validate(cert.scaled), "integerize_triangle_tiling(scaled)");
    return cert;
}

TriScaleCert integerize_trapezoid_or_parallelogram(const TriTiling& t) {
    require_valid(validate(t), "integerize_trapezoid_or_parallelogram");
    if (std::holds_alternative<TriangleRegion>(t.region))
        throw std::invalid_argument(
            "integerize_trapezoid_or_parallelogram: region is a triangle; use "
            "integerize_triangle_tiling");
    size_t n = t.tiles.size();

    // Complete the region to a triangle; auxiliary tiles go at the end so the
    // returned tiling is a clean prefix.
    TriTiling aug;
    Rat anchor_a, anchor_b, full_side;
    Int exp_num;
    if (const auto* tz = std::get_if<TrapezoidRegion>(&t.region)) {
        anchor_a = tz->a;
        anchor_b = tz->b;
        full_side = tz->base;
        aug.region = TriangleRegion{tz->a, tz->b, tz->base};
        aug.tiles = t.tiles;
        aug.tiles.push_back({tz->a, tz->b + tz->height, tz->top});
        exp_num = 2 * Int(n);
    } else {
        const auto& pg = std::get<ParallelogramRegion>(t.region);
        anchor_a = pg.a;
        anchor_b = pg.b;
        full_side = pg.p + pg.q;
        aug.region = TriangleRegion{pg.a, pg.b, pg.p + pg.q};
        aug.tiles = t.tiles;
        aug.tiles.push_back({pg.a, pg.b + pg.q, pg.p});
        aug.tiles.push_back({pg.a + pg.p, pg.b, pg.q});
        exp_num = 2 * Int(n) + 2;
    }
    if (!validate(aug).pass())
        throw CertificationFailure(
            "integerize_trapezoid_or_parallelogram: augmented tiling is invalid");

    TriScaleCert inner = integerize_triangle_tiling(aug);

    // The returned tiling keeps the original region kind: rotation only
    // reorients coordinates and side lengths are rotation invariant, so the
    // unrotated normalized tiling scaled by the same q has the certified
    // integer sides.
    Rat s = Rat(1) / full_side;
    TriTiling norm = scale_translate(t, s, -s * anchor_a, -s * anchor_b);

    TriScaleCert cert;
    cert.q = inner.q;
    cert.rotation = inner.rotation;
    cert.bound = PaperBound{1, 4, exp_num, 3};
    cert.scaled = scale_translate(norm, Rat(inner.q), Rat(0), Rat(0));
    cert.sides.assign(inner.sides.begin(), inner.sides.begin() + n);
    for (size_t k = 0; k < n; ++k)
        if (Rat(cert.sides[k]) != cert.scaled.tiles[k].side())
            throw CertificationFailure(
                "integerize_trapezoid_or_parallelogram: side mismatch after "
                "dropping auxiliary tiles");
    if (!cert.bound.satisfied_by(Rat(cert.q)))
        throw CertificationFailure("integerize_trapezoid_or_parallelogram: q exceeds " +
                                   cert.bound.str());
    require_valid(validate(cert.scaled),
                  "integerize_trapezoid_or_parallelogram(scaled)");
    return cert;
}

} // namespace tilescale
