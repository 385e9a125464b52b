#pragma once

#include "tilescale/coords.hpp"
#include "tilescale/dirichlet.hpp"
#include "tilescale/tiling.hpp"

#include <array>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tilescale {

/// A scaling-pipeline hypothesis does not hold for the given input; the
/// message names the offending coordinate or condition. Distinct from
/// structural errors (std::invalid_argument).
struct PreconditionViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A certified conclusion failed to hold. Never expected to fire; it would
/// falsify the mathematics behind the pipeline.
struct CertificationFailure : std::logic_error {
    using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Half-shifted grid-line counting
// ---------------------------------------------------------------------------
//
// The half-shifted grid lines are {k + 1/2} x R and R x {k + 1/2} for integer
// k. The number of them strictly between lo and hi equals
// round(hi) - round(lo) with round(x) = floor(x + 1/2), provided neither
// endpoint sits exactly on a line.

/// Count of half-shifted lines through the open interval (lo, hi). Endpoints
/// with fractional part exactly 1/2 are rejected.
Int count_half_shifted(const Rat& lo, const Rat& hi);

struct GridLineCount {
    Int v; // vertical lines through the tile's x-extent
    Int h; // horizontal lines through the tile's y-extent
};

struct TriGridLineCount {
    Int diag; // 60-degree diagonal lines (images of vertical ones)
    Int h;    // horizontal lines
};

/// For a square with every coordinate closer than 1/4 to an integer, the
/// vertical and horizontal counts agree; exposed as a testable predicate.
bool check_balanced_lines_square(const RectTile& tile);

/// Diagonal and horizontal counts through the triangle T(a,b,c); rejects
/// vertices with a coordinate of fractional part exactly 1/2.
TriGridLineCount count_half_shifted_diag(const TriTile& tile);

// ---------------------------------------------------------------------------
// Aspect ratio and flow diagnostics
// ---------------------------------------------------------------------------

struct AspectRatioReport {
    bool vertical_line_hits_region = false; // at least one vertical line meets it
    bool vertex_free = false;               // no vertex coordinate has fractional part 1/2
    bool balanced = false;                  // every square has equal v and h counts
    std::string violation;                  // first violated condition, if any
    Int v = 0, h = 0;                       // counts through the region
    std::optional<Rat> ratio;               // h/v when all conditions hold

    bool conditions_hold() const {
        return vertical_line_hits_region && vertex_free && balanced;
    }
};

/// Counts grid lines through a square tiling's region and derives the aspect
/// ratio h/v; certifies it equals height/width exactly.
AspectRatioReport dehn_aspect_ratio(const RectTiling& t);

struct FlowCheckReport {
    std::vector<size_t> hypothesis_failures; // tiles violating the flow equation
    std::vector<size_t> conclusion_failures; // tiles with r not fixing y-coords
    bool conclusion_checked = false;         // only meaningful if hypotheses hold

    bool hypotheses_hold() const { return hypothesis_failures.empty(); }
    bool conclusion_holds() const {
        return conclusion_checked && conclusion_failures.empty();
    }
};

/// Harness for the flow argument: r must fix the region's y-coordinates; the
/// per-tile hypothesis is (b-a)*(r(d)-r(c)) = (r(b)-r(a))*(d-c). When every
/// hypothesis holds, r must fix every tile y-coordinate; any conclusion
/// failure is reported (it would falsify the underlying lemma).
FlowCheckReport rfunction_flow_check(const RectTiling& t,
                                     const std::function<Rat(const Rat&)>& r);

/// For a square tiling with an integer-coordinate opposite side pair and all
/// vertex coordinates strictly closer than 1/4 to integers: certifies each
/// side length equals its horizontal-line count and returns those integers.
std::vector<Int> almost_integer_snap(const RectTiling& t);

// ---------------------------------------------------------------------------
// Scaling certificates
// ---------------------------------------------------------------------------

/// coeff * base^(exp_num/exp_den), compared exactly by raising both sides to
/// the exp_den-th power.
struct PaperBound {
    Int coeff = 1;
    Int base = 4;
    Int exp_num = 0;
    Int exp_den = 1;

    bool satisfied_by(const Rat& value) const;
    std::string str() const;
};

struct SquareScaleCert {
    Int q;
    PaperBound bound;       // on the longest side of the scaled region (= q)
    RectTiling scaled;      // q times the normalized tiling
    std::vector<Int> sides; // integer side of every square tile
};

SquareScaleCert integerize_square_tiling(const RectTiling& t);

struct RectScaleCert {
    Int q;
    PaperBound bound;
    RectTiling scaled;
    std::vector<Int> multipliers;          // s_i: tile i measures s_i*(q_i, p_i)
    std::vector<std::array<Int, 2>> sides; // {width, height} per tile
};

/// Every tile must carry a vertical:horizontal ratio in lowest terms.
RectScaleCert integerize_rect_tiling(const RectTiling& t);

/// The axis-(i,j) plane section of a cuboid tiling at the given anchor values
/// for the remaining axes (in increasing axis order). The anchor must avoid
/// every tile vertex coordinate; the slices form an exact tiling of the
/// region's (i,j) face.
RectTiling cuboid_cross_section(const CuboidTiling& t, size_t i, size_t j,
                                std::span<const Rat> anchor);

struct CubeScaleCert {
    Int q;
    size_t axis_i, axis_j;
    PaperBound shortest_bound; // on the shortest scaled region side
    PaperBound longest_bound;  // on the longest scaled region side
    CuboidTiling scaled;
    std::vector<Int> sides;
    size_t sections_checked; // cross-section redundancy path
};

CubeScaleCert integerize_hypercube_tiling(const CuboidTiling& t);

struct CuboidScaleCert {
    Int q;
    size_t axis_i, axis_j;
    PaperBound bound;
    CuboidTiling scaled;
    std::vector<Int> multipliers;        // s_k: tile k measures s_k * shape_k
    std::vector<std::vector<Int>> sides; // integer side vectors
};

/// Every tile must carry a positive integer shape vector.
CuboidScaleCert integerize_hypercuboid_tiling(const CuboidTiling& t);

struct TriScaleCert {
    Int q;
    int rotation; // rotation applied before approximation (0..2)
    PaperBound bound;
    TriTiling scaled;
    std::vector<Int> sides;
};

TriScaleCert integerize_triangle_tiling(const TriTiling& t);

/// Completes the region to a triangle with one (trapezoid) or two
/// (parallelogram) auxiliary tiles, runs the triangle pipeline, and returns
/// the certificate with the auxiliary tiles discarded.
TriScaleCert integerize_trapezoid_or_parallelogram(const TriTiling& t);

} // namespace tilescale
