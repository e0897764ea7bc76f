#include <covreduct/dynamic_update.hpp>

#include <algorithm>
#include <string>

#include <covreduct/errors.hpp>

namespace covreduct {

namespace {

/// Per-object incidence of `haystack` blocks, to test "needle ⊆ some block"
/// without scanning every pair: only blocks through one member of the needle
/// can contain it.
bool each_block_contained(const Covering& needles, const Covering& haystack) {
    std::vector<std::vector<std::size_t>> inc(haystack.universe_size());
    for (std::size_t b = 0; b < haystack.size(); ++b)
        haystack.block(b).for_each([&](std::size_t x) { inc[x].push_back(b); });
    for (const auto& needle : needles.blocks()) {
        const std::size_t witness = needle.to_indices().front();
        bool held = false;
        for (std::size_t b : inc[witness])
            if (haystack.block(b).contains(needle)) { held = true; break; }
        if (!held) return false;
    }
    return true;
}

void check_state(const IncrementalState& state) {
    if (state.family.fingerprint() != state.fingerprint)
        raise(errc::stale_state, "related family no longer matches its fingerprint");
#ifndef NDEBUG
    if (!(related_family(state.system) == state.family))
        raise(errc::stale_state, "related family diverges from recomputation");
#endif
}

ObjectSet admissible_union_of(const Covering& c, const DecisionPartition& d) {
    ObjectSet u(c.universe_size());
    for (const auto& b : c.blocks())
        for (const auto& cls : d.classes())
            if (cls.contains(b)) { u |= b; break; }
    return u;
}

ObjectSet union_except(const std::vector<ObjectSet>& unions, std::size_t skip, std::size_t n) {
    ObjectSet u(n);
    for (std::size_t i = 0; i < unions.size(); ++i)
        if (i != skip) u |= unions[i];
    return u;
}

void check_target(const IncrementalState& state, std::size_t target) {
    if (target >= state.system.covering_count())
        raise(errc::invalid_argument, "mutation target " + std::to_string(target) +
                                          " out of range");
}

} // namespace

bool verify_refinement(const Covering& before, const Covering& after) {
    if (before.universe_size() != after.universe_size())
        raise(errc::universe_mismatch, "coverings over different universes");
    return each_block_contained(after, before);
}

bool verify_coarsening(const Covering& before, const Covering& after) {
    if (before.universe_size() != after.universe_size())
        raise(errc::universe_mismatch, "coverings over different universes");
    return each_block_contained(before, after);
}

IncrementalState make_incremental_state(CoveringDecisionSystem system, bool with_reducts) {
    RelatedFamily fam = related_family(system);
    std::vector<ObjectSet> unions = admissible_unions(system);
    std::optional<ReductSet> reducts;
    if (with_reducts) reducts = all_reducts(fam);
    const std::uint64_t fp = fam.fingerprint();
    return IncrementalState{std::move(system), std::move(fam), std::move(unions),
                            std::move(reducts), fp, 0};
}

UpdatedFamily update_related_refine(const IncrementalState& state, const Covering& replacement,
                                    std::size_t target) {
    check_target(state, target);
    check_state(state);
    ObjectSet u_new = admissible_union_of(replacement, state.system.decision());
    if (!u_new.contains(state.unions[target]))
        raise(errc::not_a_refinement,
              "replacement loses admissible objects of the target covering");

    const std::size_t n = state.system.universe_size();
    std::vector<CoveringIndexSet> sets = state.family.sets();
    u_new.for_each([&](std::size_t x) { sets[x].set(target); });
    ObjectSet pos = union_except(state.unions, target, n) | u_new;
    return UpdatedFamily{RelatedFamily(std::move(pos), std::move(sets)), std::move(u_new),
                         target, MutationKind::refine};
}

UpdatedFamily update_related_coarsen(const IncrementalState& state, const Covering& replacement,
                                     std::size_t target) {
    check_target(state, target);
    check_state(state);
    ObjectSet u_new = admissible_union_of(replacement, state.system.decision());
    if (!state.unions[target].contains(u_new))
        raise(errc::not_a_coarsening,
              "replacement gains admissible objects over the target covering");

    const std::size_t n = state.system.universe_size();
    std::vector<CoveringIndexSet> sets = state.family.sets();
    for (std::size_t x = 0; x < n; ++x) {
        if (u_new.test(x))
            sets[x].set(target);
        else
            sets[x].reset(target);
    }
    ObjectSet pos = union_except(state.unions, target, n) | u_new;
    return UpdatedFamily{RelatedFamily(std::move(pos), std::move(sets)), std::move(u_new),
                         target, MutationKind::coarsen};
}

namespace {

void check_reduct_inputs(const IncrementalState& state, const UpdatedFamily& updated,
                         MutationKind kind) {
    check_state(state);
    if (updated.kind != kind)
        raise(errc::invalid_argument, "updated family was produced for the other mutation kind");
    if (!state.reducts)
        raise(errc::invalid_argument, "state does not carry a maintained reduct set");
}

/// Clauses of the ▲ system: related sets of positive objects outside the
/// replacement's admissible union.  `sets` must already be the updated table
/// for coarsening (r⁻) and may be either table for refinement (unchanged
/// there).
std::vector<CoveringIndexSet> delta_clauses(const ObjectSet& scope, const ObjectSet& u_new,
                                            const RelatedFamily& fam, std::size_t target) {
    std::vector<CoveringIndexSet> clauses;
    (scope - u_new).for_each([&](std::size_t x) {
        const CoveringIndexSet r = fam.related(x);
        if (r.test(target))
            raise(errc::stale_state, "related set outside the admissible union holds the target");
        clauses.push_back(r);
    });
    return clauses;
}

ReductSet with_target(ReductSet sets, std::size_t target) {
    for (auto& s : sets) s.set(target);
    return sets;
}

} // namespace

IncrementalReducts incremental_all_reducts_refine(const IncrementalState& state,
                                                  const UpdatedFamily& updated) {
    check_reduct_inputs(state, updated, MutationKind::refine);
    const std::size_t target = updated.target;
    const bool pos_changed = !(state.family.pos() == updated.family.pos());

    // unchanged related sets outside ∪A of the replacement (old == new there)
    ReductSet terms = with_target(
        minimal_hitting_sets(
            delta_clauses(state.family.pos(), updated.admissible_union, updated.family, target)),
        target);

    IncrementalReducts out{{}, {}, {}, pos_changed};
    if (pos_changed) {
        // every new reduct passes through the refined covering
        out.generated = std::move(terms);
        out.reducts = out.generated;
        return out;
    }
    for (const auto& r : *state.reducts)
        if (!r.test(target)) out.retained.push_back(r);
    // a term strictly containing any old reduct is not minimal: old reducts
    // keep hitting the updated family under refinement
    for (const auto& t : terms) {
        bool absorbed = false;
        for (const auto& old : *state.reducts)
            if (old.is_proper_subset_of(t)) { absorbed = true; break; }
        if (!absorbed) out.generated.push_back(t);
    }
    out.reducts = out.retained;
    out.reducts.insert(out.reducts.end(), out.generated.begin(), out.generated.end());
    std::sort(out.reducts.begin(), out.reducts.end(), lex_less);
    return out;
}

IncrementalReducts incremental_all_reducts_coarsen(const IncrementalState& state,
                                                   const UpdatedFamily& updated) {
    check_reduct_inputs(state, updated, MutationKind::coarsen);
    const std::size_t target = updated.target;
    const bool pos_changed = !(state.family.pos() == updated.family.pos());

    IncrementalReducts out{{}, {}, {}, pos_changed};
    if (pos_changed) {
        // the shrunken positive region invalidates the old decomposition:
        // rebuild from the updated related sets (which reuse r(x) off-target)
        std::vector<CoveringIndexSet> clauses;
        updated.family.pos().for_each(
            [&](std::size_t x) { clauses.push_back(updated.family.related(x)); });
        out.generated = minimal_hitting_sets(std::move(clauses));
        out.reducts = out.generated;
        return out;
    }

    ReductSet terms = with_target(
        minimal_hitting_sets(
            delta_clauses(state.family.pos(), updated.admissible_union, updated.family, target)),
        target);
    for (const auto& r : *state.reducts)
        if (!r.test(target)) out.retained.push_back(r);
    // filter only against old reducts that avoid the target: an old reduct
    // through the coarsened covering may itself stop being a reduct, so it
    // must not absorb new terms
    for (const auto& t : terms) {
        bool absorbed = false;
        for (const auto& old : out.retained)
            if (old.is_proper_subset_of(t)) { absorbed = true; break; }
        if (!absorbed) out.generated.push_back(t);
    }
    out.reducts = out.retained;
    out.reducts.insert(out.reducts.end(), out.generated.begin(), out.generated.end());
    std::sort(out.reducts.begin(), out.reducts.end(), lex_less);
    return out;
}

GreedyReduct ihvr(const IncrementalState& state, const UpdatedFamily& updated) {
    check_state(state);
    if (updated.kind != MutationKind::refine)
        raise(errc::invalid_argument, "ihvr expects a refinement update");
    return heuristic_reduct(minimal_related_sets(updated.family));
}

GreedyReduct ihvc(const IncrementalState& state, const UpdatedFamily& updated) {
    check_state(state);
    if (updated.kind != MutationKind::coarsen)
        raise(errc::invalid_argument, "ihvc expects a coarsening update");
    return heuristic_reduct(minimal_related_sets(updated.family));
}

IncrementalState advance(const IncrementalState& state, const CoveringMutation& mutation) {
    check_target(state, mutation.target);
    const Covering& before = state.system.covering(mutation.target);
    UpdatedFamily upd = [&] {
        if (mutation.kind == MutationKind::refine) {
            if (!verify_refinement(before, mutation.covering))
                raise(errc::not_a_refinement,
                      "a proposed block fits inside no current block");
            return update_related_refine(state, mutation.covering, mutation.target);
        }
        if (!verify_coarsening(before, mutation.covering))
            raise(errc::not_a_coarsening, "a current block fits inside no proposed block");
        return update_related_coarsen(state, mutation.covering, mutation.target);
    }();

    std::optional<ReductSet> reducts;
    if (state.reducts) {
        reducts = (mutation.kind == MutationKind::refine)
                      ? incremental_all_reducts_refine(state, upd).reducts
                      : incremental_all_reducts_coarsen(state, upd).reducts;
    }
    std::vector<ObjectSet> unions = state.unions;
    unions[mutation.target] = upd.admissible_union;
    const std::uint64_t fp = upd.family.fingerprint();
    return IncrementalState{state.system.with_covering(mutation.target, mutation.covering),
                            std::move(upd.family),
                            std::move(unions),
                            std::move(reducts),
                            fp,
                            state.generation + 1};
}

} // namespace covreduct
