#pragma once

#include "tilescale/tiling.hpp"

#include <utility>
#include <vector>

namespace tilescale {

/// Distinct vertex coordinates of a rectangle tiling per direction, with the
/// n+3 bound on the combined count.
struct CoordReport {
    std::vector<Rat> xs, ys; // sorted, distinct
    size_t count = 0;        // |xs| + |ys|
    Rat bound;               // n + 3
    bool pass = false;
};

CoordReport rect_coord_sets(const RectTiling& t);

/// Axis-perpendicular hyperplanes containing interior facets of tiles, with
/// the n-1 bound and an explicit covering re-check.
struct HyperplaneCover {
    std::vector<std::pair<size_t, Rat>> planes; // (axis, coordinate), sorted
    size_t bound = 0;                           // n - 1
    bool pass = false;
    bool covers = false;
};

HyperplaneCover cuboid_hyperplane_cover(const CuboidTiling& t);

/// Axis pair minimizing the combined number of distinct vertex coordinates,
/// with the 2(n-1)/d + 4 bound. Ties resolve to the lexicographically
/// smallest (i, j).
struct AxisPairReport {
    size_t i = 0, j = 1;
    size_t count = 0;
    Rat bound;
    bool pass = false;
};

AxisPairReport cuboid_best_axis_pair(const CuboidTiling& t);

/// The three line direction classes of a triangle tiling in oblique
/// coordinates: a = const, b = const, a + b = const.
enum class TriLineClass { Vertical, Horizontal, Diagonal };

struct TriLine {
    TriLineClass cls;
    Rat value;

    friend bool operator<(const TriLine& x, const TriLine& y) {
        if (x.cls != y.cls) return x.cls < y.cls;
        return x.value < y.value;
    }
    friend bool operator==(const TriLine& x, const TriLine& y) {
        return x.cls == y.cls && x.value == y.value;
    }
};

/// Lines containing interior edges of tiles (region must be a triangle or a
/// trapezoid), with the n-1 bound and covering re-check.
struct LineCover {
    std::vector<TriLine> lines;
    size_t bound = 0; // n - 1
    bool pass = false;
    bool covers = false;
};

LineCover tri_line_cover(const TriTiling& t);

/// Best of the three 120-degree rotations of a tiling of T(0,0,1): the one
/// minimizing the set S of first and second vertex coordinate values
/// excluding 0 and 1, with the (2n-2)/3 bound.
struct RotationReport {
    int rotation = 0;        // number of rotation applications, 0..2
    std::vector<Rat> coords; // S for the chosen rotation, sorted
    Rat bound;               // (2n-2)/3
    bool pass = false;
    TriTiling rotated;
};

RotationReport tri_best_rotation(const TriTiling& t);

} // namespace tilescale
