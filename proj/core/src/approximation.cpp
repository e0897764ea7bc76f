#include <covreduct/approximation.hpp>

#include <optional>

namespace covreduct {

Covering union_covering(const CoveringDecisionSystem& s) {
    std::vector<ObjectSet> blocks;
    for (const auto& cov : s.coverings())
        for (const auto& b : cov.blocks()) blocks.push_back(b);
    return Covering(s.universe_size(), std::move(blocks)); // ctor dedups
}

namespace {

/// Per-object incidence lists: block indices of c containing each object.
std::vector<std::vector<std::size_t>> block_incidence(const Covering& c) {
    std::vector<std::vector<std::size_t>> inc(c.universe_size());
    for (std::size_t b = 0; b < c.size(); ++b)
        c.block(b).for_each([&](std::size_t x) { inc[x].push_back(b); });
    return inc;
}

/// Md(x) as block indices, given x's incidence list.
std::vector<std::size_t> minimal_in(const Covering& c,
                                    const std::vector<std::size_t>& holding) {
    std::vector<std::size_t> md;
    for (std::size_t b : holding) {
        bool minimal = true;
        for (std::size_t other : holding) {
            if (other == b) continue;
            const auto& ob = c.block(other);
            if (c.block(b).contains(ob) && ob != c.block(b)) { minimal = false; break; }
        }
        if (minimal) md.push_back(b);
    }
    return md;
}

} // namespace

std::vector<ObjectSet> minimal_description(const Covering& c, std::size_t x) {
    std::vector<std::size_t> holding;
    for (std::size_t b = 0; b < c.size(); ++b)
        if (c.block(b).test(x)) holding.push_back(b);
    std::vector<ObjectSet> out;
    for (std::size_t b : minimal_in(c, holding)) out.push_back(c.block(b));
    return out;
}

ObjectSet lower_approx(const Covering& c, const ObjectSet& x) {
    ObjectSet out(c.universe_size());
    for (const auto& b : c.blocks())
        if (x.contains(b)) out |= b;
    return out;
}

ObjectSet upper_approx(const Covering& c, const ObjectSet& x) {
    // Md is evaluated lazily per member and memoized for the duration of the
    // call: distinct members of X frequently share incidence lists.
    const auto inc = block_incidence(c);
    std::vector<std::optional<std::vector<std::size_t>>> md_cache(c.universe_size());
    ObjectSet out(c.universe_size());
    x.for_each([&](std::size_t obj) {
        auto& md = md_cache[obj];
        if (!md) md = minimal_in(c, inc[obj]);
        for (std::size_t b : *md) out |= c.block(b);
    });
    return out;
}

ObjectSet positive_region(const CoveringDecisionSystem& s) {
    const Covering u = union_covering(s);
    ObjectSet pos(s.universe_size());
    for (const auto& d : s.decision().classes()) pos |= lower_approx(u, d);
    return pos;
}

Regions classify_regions(const CoveringDecisionSystem& s, const ObjectSet& x) {
    const Covering u = union_covering(s);
    Regions r{lower_approx(u, x), ObjectSet(s.universe_size()), ObjectSet(s.universe_size())};
    const ObjectSet upper = upper_approx(u, x);
    r.boundary = upper - r.positive;
    r.negative = upper.complement();
    return r;
}

bool is_consistent(const CoveringDecisionSystem& s) {
    return positive_region(s).is_full();
}

} // namespace covreduct
