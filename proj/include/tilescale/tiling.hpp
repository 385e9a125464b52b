#pragma once

#include "tilescale/rational.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace tilescale {

// ---------------------------------------------------------------------------
// Rectangles
// ---------------------------------------------------------------------------

struct RectRegion {
    Rat x0, x1, y0, y1;

    Rat width() const { return x1 - x0; }
    Rat height() const { return y1 - y0; }
    Rat area() const { return width() * height(); }
};

/// Vertical-to-horizontal side ratio p:q, stored in lowest terms.
struct RatioPQ {
    Int p, q;
};

struct RectTile {
    Rat x0, x1, y0, y1;
    std::optional<RatioPQ> ratio;

    Rat width() const { return x1 - x0; }
    Rat height() const { return y1 - y0; }
    Rat area() const { return width() * height(); }
    bool is_square() const { return width() == height(); }
};

struct RectTiling {
    RectRegion region;
    std::vector<RectTile> tiles;
};

// ---------------------------------------------------------------------------
// Hypercuboids
// ---------------------------------------------------------------------------

struct Box {
    std::vector<Rat> lo, hi;

    size_t dim() const { return lo.size(); }
    Rat side(size_t axis) const { return hi[axis] - lo[axis]; }
    Rat volume() const;
};

struct CuboidTile {
    Box box;
    /// Integer shape vector: the tile is similar to shape[0] x ... x shape[d-1].
    std::optional<std::vector<Int>> shape;
};

struct CuboidTiling {
    Box region;
    std::vector<CuboidTile> tiles;
};

// ---------------------------------------------------------------------------
// Equilateral triangles in oblique coordinates
// ---------------------------------------------------------------------------
//
// Points are kept in the oblique 60-degree system with basis (1,0) and
// (1/2, sqrt(3)/2); psi(a,b) denotes the Cartesian image of (a,b). A tile
// T(a,b,c) is the equilateral triangle with vertices psi(a,b), psi(a+c,b),
// psi(a,b+c); negative c encodes a downward triangle. Its side length is |c|
// and its area in (a,b)-space is c^2/2 (the constant Jacobian cancels in all
// area-balance checks, so we never leave rational arithmetic).

struct TriTile {
    Rat a, b, c;

    Rat side() const { return c.abs(); }
    /// Area measured in (a,b)-space.
    Rat psi_area() const { return c * c / Rat(2); }
};

/// Region T(a,b,side), side > 0.
struct TriangleRegion {
    Rat a, b, side;
};

/// Horizontal parallel sides of lengths base (bottom) and top, legs along the
/// two non-horizontal tile directions; base = top + height.
struct TrapezoidRegion {
    Rat a, b, base, top, height;
};

/// Sides along the two oblique basis directions, lengths p and q.
struct ParallelogramRegion {
    Rat a, b, p, q;
};

using TriRegion = std::variant<TriangleRegion, TrapezoidRegion, ParallelogramRegion>;

struct TriTiling {
    TriRegion region;
    std::vector<TriTile> tiles;
};

Rat tri_region_psi_area(const TriRegion& r);

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

/// Outcome of the exact partition check: containment, pairwise interior
/// disjointness, and measure balance. All three passing certifies an exact
/// tiling (disjoint interiors + equal measure + containment force coverage
/// for finitely many closed convex tiles).
struct ValidationReport {
    bool containment_ok = true;
    bool disjoint_ok = true;
    bool area_ok = true;
    std::string detail; // first failure, human readable (names tile indices)

    bool pass() const { return containment_ok && disjoint_ok && area_ok; }
};

/// Throws std::invalid_argument on malformed data (degenerate tiles,
/// dimension mismatches, bad ratio/shape annotations).
void check_structure(const RectTiling& t);
void check_structure(const CuboidTiling& t);
void check_structure(const TriTiling& t);

ValidationReport validate(const RectTiling& t);
ValidationReport validate(const CuboidTiling& t);
ValidationReport validate(const TriTiling& t);

// ---------------------------------------------------------------------------
// Side lengths
// ---------------------------------------------------------------------------

/// Per-tile {width, height}.
std::vector<std::array<Rat, 2>> side_lengths(const RectTiling& t);
/// Per-tile side vector of length d.
std::vector<std::vector<Rat>> side_lengths(const CuboidTiling& t);
/// Per-tile |c|.
std::vector<Rat> side_lengths(const TriTiling& t);

/// All side-length values of all tiles, flattened (oracle input).
std::vector<Rat> all_side_values(const RectTiling& t);
std::vector<Rat> all_side_values(const CuboidTiling& t);
std::vector<Rat> all_side_values(const TriTiling& t);

// ---------------------------------------------------------------------------
// Transforms
// ---------------------------------------------------------------------------

/// x -> factor*x + offset on every coordinate; factor must be positive.
RectTiling scale_translate(const RectTiling& t, const Rat& factor,
                           const Rat& dx, const Rat& dy);
CuboidTiling scale_translate(const CuboidTiling& t, const Rat& factor,
                             std::span<const Rat> offset);
TriTiling scale_translate(const TriTiling& t, const Rat& factor,
                          const Rat& da, const Rat& db);

/// Swap the two axes of a rectangle tiling (ratios swap with them).
RectTiling transpose(const RectTiling& t);

/// Translate the region corner to the origin, transpose if needed so the
/// longest side is vertical (ties keep the input orientation), and scale so
/// that side is exactly 1.
RectTiling normalize_rect(const RectTiling& t);

/// 120-degree rotation about the center of the region T(0,0,1), expressed in
/// oblique coordinates as (a,b) -> (1-a-b, a); tiles map T(a,b,c) ->
/// T(1-a-b-c, a, c). Requires the region to be exactly T(0,0,1). Applying it
/// three times is the identity.
TriTiling rotate_tri_120(const TriTiling& t);

} // namespace tilescale
