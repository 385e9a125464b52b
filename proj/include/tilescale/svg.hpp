#pragma once

#include "tilescale/json_io.hpp"
#include "tilescale/tiling.hpp"

#include <string>

namespace tilescale {

/// Deterministic SVG figure: one polygon per tile, fixed palette and stroke.
/// Rationals (and the sqrt(3)/2 oblique basis) become decimals only here,
/// printed with 12 significant digits.
std::string render_svg(const RectTiling& t);
std::string render_svg(const TriTiling& t);

/// Dispatch on kind; cuboid tilings are rejected (take a plane section first).
std::string render_svg(const AnyTiling& t);

} // namespace tilescale
