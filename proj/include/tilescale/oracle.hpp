#pragma once

#include "tilescale/tiling.hpp"

#include <cstdint>
#include <optional>

namespace tilescale {

/// Smallest positive factor making every tile side length an integer
/// (independent of the approximation pipelines).
Rat minimal_scale_oracle(const RectTiling& t);
Rat minimal_scale_oracle(const CuboidTiling& t);
Rat minimal_scale_oracle(const TriTiling& t);

enum class SearchStatus {
    Exact,          // min_tiles is the true minimum
    ExceedsMaxTiles, // every tiling needs more than max_tiles squares
    ResourceLimit,  // node budget exhausted before the search completed
};

struct MinSquaresResult {
    SearchStatus status = SearchStatus::Exact;
    int min_tiles = 0;
    std::optional<RectTiling> witness;
    uint64_t nodes = 0;
};

/// Node budget for min_squares_exhaustive; reads the environment variable
/// TILESCALE_SEARCH_NODE_LIMIT, falling back to a built-in cap.
uint64_t search_node_limit();

/// Exact minimal number of integer-sided squares tiling a width x height
/// rectangle, by exhaustive backtracking: always fills the lowest-leftmost
/// empty cell, trying square sizes largest first, pruned by a remaining-area
/// bound and the best solution so far. Desk scale: max(width, height) <= 13
/// is the intended range (hard cap 31).
MinSquaresResult min_squares_exhaustive(int width, int height, int max_tiles,
                                        uint64_t node_limit = search_node_limit());

struct BoundAudit {
    Int max_side;
    Int four_pow_n;
    bool pass = false;       // 4^n >= max{p,q}, the certified inequality
    Int two_pow_n;           // context only, never asserted
    bool conway_note = false; // whether 2^n >= max{p,q} also holds
};

/// Audits a search result n for a coprime width x height rectangle against
/// the certified lower-bound inequality 4^n >= max{width, height}.
BoundAudit bound_audit(int width, int height, int n);

} // namespace tilescale
