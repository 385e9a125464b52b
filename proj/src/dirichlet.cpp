#include "tilescale/dirichlet.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tilescale {

namespace {

struct Constraint {
    Rat value;
    Rat tol; // 1/m
};

} // namespace

ApproxResult dirichlet_varied(std::span<const ApproxGroup> groups) {
    std::vector<Constraint> constraints;
    Int bound = 1;
    Int lcm_dens = 1;
    for (const ApproxGroup& g : groups) {
        if (g.m < 2)
            throw std::invalid_argument("dirichlet_varied: tolerance denominator must be >= 2");
        std::set<Rat> distinct(g.values.begin(), g.values.end());
        bound *= ipow(g.m, static_cast<unsigned long>(distinct.size()));
        for (const Rat& v : distinct) {
            constraints.push_back({v, Rat(Int(1), g.m)});
            lcm_dens = boost::multiprecision::lcm(lcm_dens, v.den());
        }
    }

    // The scan is capped by min(pigeonhole bound, lcm of denominators): any
    // multiple of the lcm gives distance 0, so the smaller cap still contains
    // the minimal q.
    Int cap = bound < lcm_dens ? bound : lcm_dens;
    for (Int q = 1; q <= cap; ++q) {
        bool ok = true;
        for (const Constraint& c : constraints)
            if (!(nearest_int_distance(Rat(q) * c.value) < c.tol)) {
                ok = false;
                break;
            }
        if (ok) {
            ApproxResult res;
            res.q = q;
            res.bound = bound;
            for (const Constraint& c : constraints)
                res.witness.emplace_back(c.value, nearest_int_distance(Rat(q) * c.value));
            return res;
        }
    }
    throw std::logic_error("dirichlet_varied: no q within the pigeonhole bound");
}

ApproxResult dirichlet(std::span<const Rat> values, const Int& N) {
    if (N < 2) throw std::invalid_argument("dirichlet: N must be >= 2");
    ApproxGroup g{std::vector<Rat>(values.begin(), values.end()), N};
    return dirichlet_varied(std::span<const ApproxGroup>(&g, 1));
}

ApproxCheck verify_approx(std::span<const Rat> values, const Int& N, const Int& q) {
    if (q < 1) throw std::invalid_argument("verify_approx: q must be >= 1");
    ApproxCheck check{true, {}};
    Rat tol(Int(1), N);
    for (const Rat& v : values) {
        Rat d = nearest_int_distance(Rat(q) * v);
        if (!(d < tol)) check.ok = false;
        check.distances.emplace_back(v, d);
    }
    return check;
}

} // namespace tilescale
