#pragma once

#include "tilescale/rational.hpp"

#include <span>
#include <utility>
#include <vector>

namespace tilescale {

/// One approximation group: find q with ||q*a|| < 1/m for every a in values.
struct ApproxGroup {
    std::vector<Rat> values;
    Int m; // tolerance denominator, >= 2
};

struct ApproxResult {
    Int q;     // smallest positive multiplier satisfying every constraint
    Int bound; // pigeonhole guarantee: product over groups of m^#values
    std::vector<std::pair<Rat, Rat>> witness; // (value, ||q*value||)
};

/// Smallest q >= 1 with ||q*a|| < 1/N (strictly) for all a. Guaranteed to
/// exist with q <= N^k, k = #distinct values; an empty set returns q = 1.
ApproxResult dirichlet(std::span<const Rat> values, const Int& N);

/// Varied version: each group has its own tolerance 1/m; the guarantee is
/// q <= prod over groups of m^#values.
ApproxResult dirichlet_varied(std::span<const ApproxGroup> groups);

struct ApproxCheck {
    bool ok;
    std::vector<std::pair<Rat, Rat>> distances;
};

/// Exact re-check that q satisfies every strict inequality.
ApproxCheck verify_approx(std::span<const Rat> values, const Int& N, const Int& q);

} // namespace tilescale
