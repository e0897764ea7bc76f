#include <covreduct/related_family.hpp>

#include <algorithm>
#include <string>

#include <covreduct/errors.hpp>

namespace covreduct {

namespace {

bool admissible(const ObjectSet& block, const DecisionPartition& d) {
    for (const auto& cls : d.classes())
        if (cls.contains(block)) return true;
    return false;
}

} // namespace

std::vector<AdmissibleBlock> admissible_blocks(const CoveringDecisionSystem& s) {
    std::vector<AdmissibleBlock> out;
    for (std::size_t i = 0; i < s.covering_count(); ++i)
        for (const auto& b : s.covering(i).blocks())
            if (admissible(b, s.decision())) out.push_back({i, b});
    return out;
}

std::vector<ObjectSet> admissible_unions(const CoveringDecisionSystem& s) {
    std::vector<ObjectSet> unions(s.covering_count(), ObjectSet(s.universe_size()));
    for (std::size_t i = 0; i < s.covering_count(); ++i)
        for (const auto& b : s.covering(i).blocks())
            if (admissible(b, s.decision())) unions[i] |= b;
    return unions;
}

RelatedFamily::RelatedFamily(ObjectSet pos, std::vector<CoveringIndexSet> sets)
    : pos_(std::move(pos)), sets_(std::move(sets)) {
    if (sets_.size() != pos_.universe_size())
        raise(errc::invalid_argument, "related-set table size mismatch");
    for (std::size_t x = 0; x < sets_.size(); ++x)
        if (sets_[x].empty() == pos_.test(x))
            raise(errc::invalid_argument,
                  "related set of object " + std::to_string(x) +
                      " contradicts positive-region membership");
}

std::uint64_t RelatedFamily::fingerprint() const {
    std::uint64_t h = pos_.hash();
    for (const auto& s : sets_) {
        h ^= s.count() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

CoveringIndexSet related_set(const CoveringDecisionSystem& s, std::size_t x) {
    if (x >= s.universe_size())
        raise(errc::universe_mismatch, "object id out of range");
    CoveringIndexSet r;
    for (std::size_t i = 0; i < s.covering_count(); ++i)
        for (const auto& b : s.covering(i).blocks())
            if (b.test(x) && admissible(b, s.decision())) { r.set(i); break; }
    return r;
}

RelatedFamily related_family(const CoveringDecisionSystem& s) {
    const auto unions = admissible_unions(s);
    const std::size_t n = s.universe_size();
    ObjectSet pos(n);
    for (const auto& u : unions) pos |= u;
    std::vector<CoveringIndexSet> sets(n);
    for (std::size_t i = 0; i < unions.size(); ++i)
        unions[i].for_each([&](std::size_t x) { sets[x].set(i); });
    return RelatedFamily(std::move(pos), std::move(sets));
}

std::vector<CoveringIndexSet> minimal_related_sets(const RelatedFamily& fam) {
    std::vector<CoveringIndexSet> distinct;
    fam.pos().for_each([&](std::size_t x) { distinct.push_back(fam.related(x)); });
    std::sort(distinct.begin(), distinct.end(),
              [](CoveringIndexSet a, CoveringIndexSet b) { return a.bits() < b.bits(); });
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    // antichain: keep sets with no distinct proper subset present
    std::vector<CoveringIndexSet> minimal;
    for (const auto& cand : distinct) {
        bool keep = true;
        for (const auto& other : distinct)
            if (other.is_proper_subset_of(cand)) { keep = false; break; }
        if (keep) minimal.push_back(cand);
    }
    std::sort(minimal.begin(), minimal.end(), lex_less);
    return minimal;
}

} // namespace covreduct
