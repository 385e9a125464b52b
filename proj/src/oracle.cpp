#include "tilescale/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace tilescale {

namespace {

template <typename Tiling>
Rat oracle_impl(const Tiling& t) {
    ValidationReport rep = validate(t);
    if (!rep.pass())
        throw std::invalid_argument("minimal_scale_oracle: invalid tiling (" +
                                    rep.detail + ")");
    std::vector<Rat> sides = all_side_values(t);
    return rational_group_generator(sides);
}

} // namespace

Rat minimal_scale_oracle(const RectTiling& t) { return oracle_impl(t); }
Rat minimal_scale_oracle(const CuboidTiling& t) { return oracle_impl(t); }
Rat minimal_scale_oracle(const TriTiling& t) { return oracle_impl(t); }

uint64_t search_node_limit() {
    if (const char* env = std::getenv("TILESCALE_SEARCH_NODE_LIMIT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 200'000'000ull;
}

namespace {

struct Placement {
    int x, y, size;
};

struct Searcher {
    int w, h;
    int cap;            // only solutions with fewer tiles than this matter
    uint64_t node_limit;
    uint64_t nodes = 0;
    bool aborted = false;
    std::vector<uint32_t> rows; // bit x set = cell (x, y) covered
    std::vector<Placement> current, best;
    int best_count;

    Searcher(int w_, int h_, int cap_, uint64_t limit)
        : w(w_), h(h_), cap(cap_), node_limit(limit), rows(h_, 0),
          best_count(cap_) {}

    bool fits(int x, int y, int s) const {
        if (x + s > w || y + s > h) return false;
        uint32_t mask = ((1u << s) - 1u) << x;
        for (int r = y; r < y + s; ++r)
            if (rows[r] & mask) return false;
        return true;
    }

    void place(int x, int y, int s, bool fill) {
        uint32_t mask = ((1u << s) - 1u) << x;
        for (int r = y; r < y + s; ++r)
            fill ? rows[r] |= mask : rows[r] &= ~mask;
    }

    void run(int used, int empty_area) {
        if (aborted) return;
        if (++nodes > node_limit) {
            aborted = true;
            return;
        }
        if (empty_area == 0) {
            best_count = used;
            best = current;
            return;
        }
        // Lowest-leftmost empty cell; a square covering it in any tiling has
        // its corner exactly there, so trying every size is exhaustive.
        int y = 0;
        uint32_t full = (1u << w) - 1u;
        while (rows[y] == full) ++y;
        int x = std::countr_one(rows[y] | ~full);
        int smax = std::min(w - x, h - y);
        int global = std::min(w, h);
        for (int s = smax; s >= 1; --s) {
            if (!fits(x, y, s)) continue;
            int rest = empty_area - s * s;
            // Even covering everything else with the largest possible square
            // cannot beat the best solution found so far.
            int lower = used + 1 + (rest + global * global - 1) / (global * global);
            if (lower >= best_count) continue;
            place(x, y, s, true);
            current.push_back({x, y, s});
            run(used + 1, rest);
            current.pop_back();
            place(x, y, s, false);
            if (aborted) return;
        }
    }
};

} // namespace

MinSquaresResult min_squares_exhaustive(int width, int height, int max_tiles,
                                        uint64_t node_limit) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("min_squares_exhaustive: sides must be >= 1");
    if (width > 31 || height > 31)
        throw std::invalid_argument("min_squares_exhaustive: sides above the hard cap 31");
    if (max_tiles < 1)
        throw std::invalid_argument("min_squares_exhaustive: max_tiles must be >= 1");

    Searcher s(width, height, max_tiles + 1, node_limit);
    s.run(0, width * height);

    MinSquaresResult res;
    res.nodes = s.nodes;
    if (s.aborted) {
        res.status = SearchStatus::ResourceLimit;
        return res;
    }
    if (s.best.empty()) {
        res.status = SearchStatus::ExceedsMaxTiles;
        return res;
    }
    res.status = SearchStatus::Exact;
    res.min_tiles = s.best_count;
    RectTiling witness;
    witness.region = {Rat(0), Rat(width), Rat(0), Rat(height)};
    for (const Placement& p : s.best)
        witness.tiles.push_back({Rat(p.x), Rat(p.x + p.size), Rat(p.y),
                                 Rat(p.y + p.size), std::nullopt});
    res.witness = std::move(witness);
    return res;
}

BoundAudit bound_audit(int width, int height, int n) {
    if (width < 1 || height < 1 || n < 1)
        throw std::invalid_argument("bound_audit: arguments must be positive");
    if (boost::multiprecision::gcd(Int(width), Int(height)) != 1)
        throw std::invalid_argument("bound_audit: sides must be coprime");
    BoundAudit audit;
    audit.max_side = Int(std::max(width, height));
    audit.four_pow_n = ipow(4, static_cast<unsigned long>(n));
    audit.pass = audit.four_pow_n >= audit.max_side;
    audit.two_pow_n = ipow(2, static_cast<unsigned long>(n));
    audit.conway_note = audit.two_pow_n >= audit.max_side;
    return audit;
}

} // namespace tilescale
