#include <covreduct/reduct.hpp>

#include <algorithm>

#include <covreduct/errors.hpp>

namespace covreduct {

namespace {

/// Absorption: drop duplicates and strict supersets (a hitting set for the
/// minimal members automatically hits the rest).
std::vector<CoveringIndexSet> absorb(std::vector<CoveringIndexSet> family) {
    std::sort(family.begin(), family.end(),
              [](CoveringIndexSet a, CoveringIndexSet b) {
                  if (a.count() != b.count()) return a.count() < b.count();
                  return a.bits() < b.bits();
              });
    family.erase(std::unique(family.begin(), family.end()), family.end());
    std::vector<CoveringIndexSet> out;
    for (const auto& cand : family) {
        bool subsumed = false;
        for (const auto& kept : out)
            if (cand.contains(kept)) { subsumed = true; break; } // kept ⊆ cand
        if (!subsumed) out.push_back(cand);
    }
    return out;
}

struct HittingSearch {
    const std::vector<CoveringIndexSet>& clauses;
    std::vector<CoveringIndexSet> found;

    bool hits_all(CoveringIndexSet h) const {
        for (const auto& c : clauses)
            if (!c.intersects(h)) return false;
        return true;
    }

    /// Minimality: every chosen index privately covers some clause.
    bool irredundant(CoveringIndexSet h) const {
        bool ok = true;
        h.for_each([&](std::size_t i) {
            if (!ok) return;
            CoveringIndexSet rest = h;
            rest.reset(i);
            bool private_clause = false;
            for (const auto& c : clauses)
                if (c.test(i) && !c.intersects(rest)) { private_clause = true; break; }
            if (!private_clause) ok = false;
        });
        return ok;
    }

    /// Branch on the first clause missed by `chosen`; `banned` carries the
    /// indices excluded by earlier sibling branches so every minimal hitting
    /// set is reached exactly once.
    void dfs(CoveringIndexSet chosen, CoveringIndexSet banned) {
        for (const auto& prior : found)
            if (chosen.contains(prior)) return; // any completion is a superset
        const CoveringIndexSet* open = nullptr;
        for (const auto& c : clauses)
            if (!c.intersects(chosen)) { open = &c; break; }
        if (!open) {
            if (irredundant(chosen)) found.push_back(chosen);
            return;
        }
        CoveringIndexSet candidates = *open - banned;
        if (candidates.empty()) return; // clause unreachable under bans
        candidates.for_each([&](std::size_t i) {
            CoveringIndexSet next = chosen;
            next.set(i);
            dfs(next, banned);
            banned.set(i);
        });
    }
};

} // namespace

ReductSet minimal_hitting_sets(std::vector<CoveringIndexSet> family) {
    for (const auto& c : family)
        if (c.empty()) raise(errc::invalid_argument, "hitting-set family contains an empty set");
    family = absorb(std::move(family));
    if (family.empty()) return {CoveringIndexSet{}};
    HittingSearch search{family, {}};
    search.dfs(CoveringIndexSet{}, CoveringIndexSet{});
    std::sort(search.found.begin(), search.found.end(), lex_less);
    return search.found;
}

ReductSet all_reducts(const RelatedFamily& fam) {
    return minimal_hitting_sets(minimal_related_sets(fam));
}

bool preserves_positive_region(const CoveringDecisionSystem& s, CoveringIndexSet p) {
    const auto unions = admissible_unions(s);
    ObjectSet pos(s.universe_size()), sub_pos(s.universe_size());
    for (std::size_t i = 0; i < unions.size(); ++i) {
        pos |= unions[i];
        if (p.test(i)) sub_pos |= unions[i];
    }
    return sub_pos == pos;
}

bool is_reduct(const CoveringDecisionSystem& s, CoveringIndexSet p) {
    for (std::size_t i = s.covering_count(); i < CoveringIndexSet::max_coverings; ++i)
        if (p.test(i)) raise(errc::invalid_argument, "covering index out of range");
    const auto unions = admissible_unions(s);
    ObjectSet pos(s.universe_size()), sub_pos(s.universe_size());
    for (std::size_t i = 0; i < unions.size(); ++i) {
        pos |= unions[i];
        if (p.test(i)) sub_pos |= unions[i];
    }
    if (sub_pos != pos) return false;
    bool minimal = true;
    p.for_each([&](std::size_t drop) {
        if (!minimal) return;
        ObjectSet rest(s.universe_size());
        for (std::size_t i = 0; i < unions.size(); ++i)
            if (p.test(i) && i != drop) rest |= unions[i];
        if (rest == pos) minimal = false; // `drop` was superfluous
    });
    return minimal;
}

GreedyReduct heuristic_reduct(const std::vector<CoveringIndexSet>& sr) {
    if (sr.empty()) return {CoveringIndexSet{}, true};
    for (const auto& s : sr)
        if (s.empty()) raise(errc::invalid_argument, "minimal related set is empty");

    std::vector<std::size_t> picks;
    CoveringIndexSet chosen;
    std::vector<char> covered(sr.size(), 0);
    std::size_t uncovered = sr.size();
    while (uncovered > 0) {
        std::size_t best = CoveringIndexSet::max_coverings, best_freq = 0;
        for (std::size_t i = 0; i < CoveringIndexSet::max_coverings; ++i) {
            if (chosen.test(i)) continue;
            std::size_t freq = 0;
            for (std::size_t k = 0; k < sr.size(); ++k)
                if (!covered[k] && sr[k].test(i)) ++freq;
            if (freq > best_freq) { best_freq = freq; best = i; } // ties keep lowest index
        }
        chosen.set(best);
        picks.push_back(best);
        for (std::size_t k = 0; k < sr.size(); ++k)
            if (!covered[k] && sr[k].test(best)) { covered[k] = 1; --uncovered; }
    }

    // reverse-order redundancy elimination: a later pick can obsolete an
    // earlier one, so retry dropping picks newest-first
    for (auto it = picks.rbegin(); it != picks.rend(); ++it) {
        CoveringIndexSet without = chosen;
        without.reset(*it);
        bool still_hits = true;
        for (const auto& s : sr)
            if (!s.intersects(without)) { still_hits = false; break; }
        if (still_hits) chosen = without;
    }
    return {chosen, false};
}

} // namespace covreduct
