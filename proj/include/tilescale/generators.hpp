#pragma once

#include "tilescale/tiling.hpp"

#include <cstdint>

namespace tilescale {

/// u_n x u_(n+1) rectangle tiled by n squares of sides u_1..u_n (u_1 = u_2 = 1),
/// built by attaching each new largest square along the longer side.
RectTiling fibonacci_tiling(int n);

/// Unit square tiled by 3 squares of side 2^-i per level i < k plus 4 squares
/// of side 2^-k; n = 3k+1. Recursion descends into the top-left quadrant.
RectTiling dyadic_square_tiling(int k);

/// d-dimensional analogue: 2^d - 1 cubes per level plus 2^d at the last;
/// n = (2^d - 1)k + 1. Coincides with dyadic_square_tiling for d = 2.
CuboidTiling dyadic_cube_tiling(int d, int k);

/// T(0,0,1) tiled by 3 triangles per level plus 4 at the last; n = 3k+1.
/// Recursion descends into the apex triangle.
TriTiling dyadic_triangle_tiling(int k);

/// The 17-square decomposition of [-1,1]^2 with side lengths 3/4, 1/2, 1/4
/// and every vertex coordinate in {0, +-1/4, +-3/4, +-1}: all coordinates sit
/// at distance exactly 1/4 from the witness threshold.
RectTiling dehn_sharpness_tiling();

/// Recursive random binary cuts of the unit square/cube; 2^depth tiles. Cut
/// positions are rationals with denominator dividing `denom` within each
/// cell, chosen to avoid repeating existing coordinate values when possible.
/// Deterministic per seed.
RectTiling random_guillotine_rect(uint64_t seed, int depth, int denom = 16);
CuboidTiling random_guillotine_cuboid(int d, uint64_t seed, int depth,
                                      int denom = 16);

/// `depth` random 4-splits applied to random tiles of T(0,0,1); 3*depth + 1
/// tiles. Deterministic per seed.
TriTiling random_guillotine_tri(uint64_t seed, int depth);

/// Random guillotine composition whose leaves are tiles with random coprime
/// vertical:horizontal ratios (entries <= max_entry); every tile carries its
/// declared ratio. Deterministic per seed.
RectTiling random_ratio_guillotine(uint64_t seed, int leaves, int max_entry);

/// Integer trapezoid (base = top + height) / parallelogram strip-tiled by
/// unit triangles.
TriTiling trapezoid_strip_tiling(int base, int height);
TriTiling parallelogram_strip_tiling(int p, int q);

/// Random trapezoid / parallelogram tilings: strip tiling of random integer
/// dimensions, `splits` random 4-splits, then a random shrink. Deterministic
/// per seed.
TriTiling random_trapezoid_tiling(uint64_t seed, int splits);
TriTiling random_parallelogram_tiling(uint64_t seed, int splits);

} // namespace tilescale
