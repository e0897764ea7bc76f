#include <covreduct/covering_system.hpp>

#include <string>
#include <unordered_set>

#include <covreduct/errors.hpp>
#include <covreduct/index_set.hpp>

namespace covreduct {

namespace {

/// Drop exact duplicate sets, keeping first occurrences in order.
std::vector<ObjectSet> dedup(std::vector<ObjectSet> sets) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<ObjectSet> out;
    out.reserve(sets.size());
    for (auto& s : sets) {
        const std::uint64_t h = s.hash();
        if (seen.insert(h).second) {
            out.push_back(std::move(s));
            continue;
        }
        // hash hit: confirm a true duplicate (collisions must not drop blocks)
        bool dup = false;
        for (const auto& kept : out)
            if (kept == s) { dup = true; break; }
        if (!dup) out.push_back(std::move(s));
    }
    return out;
}

} // namespace

Covering::Covering(std::size_t n, std::vector<ObjectSet> blocks) : n_(n) {
    if (n == 0) raise(errc::invalid_argument, "covering over an empty universe");
    if (blocks.empty()) raise(errc::not_a_covering, "covering has no blocks");
    ObjectSet covered(n);
    for (const auto& b : blocks) {
        if (b.universe_size() != n)
            raise(errc::universe_mismatch, "block universe size " +
                                               std::to_string(b.universe_size()) +
                                               " != " + std::to_string(n));
        if (b.empty()) raise(errc::empty_block, "covering contains an empty block");
        covered |= b;
    }
    if (!covered.is_full())
        raise(errc::not_a_covering, "blocks leave " +
                                        std::to_string(n - covered.count()) +
                                        " object(s) uncovered");
    blocks_ = dedup(std::move(blocks));
}

DecisionPartition::DecisionPartition(std::size_t n, std::vector<ObjectSet> classes) : n_(n) {
    if (n == 0) raise(errc::invalid_argument, "partition over an empty universe");
    if (classes.empty()) raise(errc::not_a_partition, "decision has no classes");
    ObjectSet covered(n);
    for (const auto& c : classes) {
        if (c.universe_size() != n)
            raise(errc::universe_mismatch, "decision class universe size mismatch");
        if (c.empty()) raise(errc::not_a_partition, "decision contains an empty class");
        if (covered.intersects(c))
            raise(errc::not_a_partition, "decision classes overlap");
        covered |= c;
    }
    if (!covered.is_full())
        raise(errc::not_a_partition, "decision classes leave " +
                                         std::to_string(n - covered.count()) +
                                         " object(s) unlabeled");
    classes_ = std::move(classes);
}

CoveringDecisionSystem::CoveringDecisionSystem(std::size_t n, std::vector<Covering> coverings,
                                               DecisionPartition decision)
    : n_(n), coverings_(std::move(coverings)), decision_(std::move(decision)) {
    if (n == 0) raise(errc::invalid_argument, "system over an empty universe");
    if (coverings_.empty()) raise(errc::invalid_argument, "system needs at least one covering");
    if (coverings_.size() > CoveringIndexSet::max_coverings)
        raise(errc::invalid_argument, "at most " +
                                          std::to_string(CoveringIndexSet::max_coverings) +
                                          " coverings supported, got " +
                                          std::to_string(coverings_.size()));
    for (const auto& c : coverings_)
        if (c.universe_size() != n)
            raise(errc::universe_mismatch, "covering universe size mismatch");
    if (decision_.universe_size() != n)
        raise(errc::universe_mismatch, "decision universe size mismatch");
}

CoveringDecisionSystem CoveringDecisionSystem::with_covering(std::size_t target,
                                                             Covering replacement) const {
    if (target >= coverings_.size())
        raise(errc::invalid_argument, "covering index " + std::to_string(target) +
                                          " out of range");
    std::vector<Covering> cs = coverings_;
    cs[target] = std::move(replacement);
    return CoveringDecisionSystem(n_, std::move(cs), decision_);
}

namespace {

ObjectSet set_from_ids(std::size_t n, const std::vector<std::size_t>& ids,
                       const char* what) {
    ObjectSet s(n);
    for (std::size_t id : ids) {
        if (id >= n)
            raise(errc::universe_mismatch, std::string(what) + " id " + std::to_string(id) +
                                               " outside universe of size " + std::to_string(n));
        s.set(id);
    }
    return s;
}

} // namespace

CoveringDecisionSystem
build_system(std::size_t n, const std::vector<std::vector<std::vector<std::size_t>>>& coverings,
             const std::vector<std::vector<std::size_t>>& decision) {
    if (n == 0) raise(errc::invalid_argument, "universe must be nonempty");
    std::vector<Covering> cs;
    cs.reserve(coverings.size());
    for (const auto& blocks : coverings) {
        std::vector<ObjectSet> bs;
        bs.reserve(blocks.size());
        for (const auto& ids : blocks) bs.push_back(set_from_ids(n, ids, "block member"));
        cs.emplace_back(n, std::move(bs));
    }
    std::vector<ObjectSet> ds;
    ds.reserve(decision.size());
    for (const auto& ids : decision) ds.push_back(set_from_ids(n, ids, "decision member"));
    return CoveringDecisionSystem(n, std::move(cs), DecisionPartition(n, std::move(ds)));
}

CoveringDecisionSystem restrict_system(const CoveringDecisionSystem& s, const ObjectSet& keep) {
    if (keep.universe_size() != s.universe_size())
        raise(errc::universe_mismatch, "keep-set universe size mismatch");
    if (keep.empty()) raise(errc::empty_restriction, "keep-set is empty");

    // dense re-map old id -> new id, increasing old-id order
    const std::size_t sub_n = keep.count();
    std::vector<std::size_t> new_id(s.universe_size(), 0);
    {
        std::size_t next = 0;
        keep.for_each([&](std::size_t old) { new_id[old] = next++; });
    }
    auto project = [&](const ObjectSet& x) {
        ObjectSet out(sub_n);
        (x & keep).for_each([&](std::size_t old) { out.set(new_id[old]); });
        return out;
    };

    std::vector<Covering> cs;
    cs.reserve(s.covering_count());
    for (const auto& cov : s.coverings()) {
        std::vector<ObjectSet> bs;
        for (const auto& b : cov.blocks()) {
            ObjectSet p = project(b);
            if (!p.empty()) bs.push_back(std::move(p));
        }
        // every kept object lies in some original block, so its projection
        // is nonempty: a gap here means internal corruption
        ObjectSet covered(sub_n);
        for (const auto& b : bs) covered |= b;
        if (!covered.is_full())
            raise(errc::restriction_breaks_covering,
                  "kept object lost every block of a covering");
        cs.emplace_back(sub_n, std::move(bs));
    }

    std::vector<ObjectSet> ds;
    for (const auto& c : s.decision().classes()) {
        ObjectSet p = project(c);
        if (!p.empty()) ds.push_back(std::move(p));
    }
    return CoveringDecisionSystem(sub_n, std::move(cs), DecisionPartition(sub_n, std::move(ds)));
}

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::invalid_argument: return "invalid argument";
        case errc::empty_block: return "empty block";
        case errc::not_a_covering: return "not a covering";
        case errc::not_a_partition: return "not a partition";
        case errc::universe_mismatch: return "universe mismatch";
        case errc::empty_restriction: return "empty restriction";
        case errc::restriction_breaks_covering: return "restriction breaks covering";
        case errc::not_a_refinement: return "not a refinement";
        case errc::not_a_coarsening: return "not a coarsening";
        case errc::stale_state: return "stale incremental state";
        case errc::parse_error: return "parse error";
        case errc::non_numeric_conditional: return "non-numeric conditional value";
        case errc::empty_file: return "empty file";
        case errc::timeout: return "timeout";
        case errc::io_error: return "I/O error";
    }
    return "unknown error";
}

} // namespace covreduct
