#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <covreduct/covering_system.hpp>
#include <covreduct/reduct.hpp>
#include <covreduct/related_family.hpp>

namespace covreduct {

enum class MutationKind { refine, coarsen };

/// Single-covering mutation: replace covering `target` by `covering`.
/// refine: every new block ⊆ some old block; coarsen: every old block ⊆ some
/// new block.  Multi-step sequences chain through IncrementalState.
struct CoveringMutation {
    std::size_t target;
    MutationKind kind;
    Covering covering;
};

/// True iff every block of `after` is contained in some block of `before`.
bool verify_refinement(const Covering& before, const Covering& after);

/// True iff every block of `before` is contained in some block of `after`.
bool verify_coarsening(const Covering& before, const Covering& after);

/// Snapshot carried between mutations: the system, its related family, the
/// per-covering admissible unions (the positive region is their union), the
/// reduct set when exact maintenance is requested, and bookkeeping for
/// staleness detection and mutation traceability.
struct IncrementalState {
    CoveringDecisionSystem system;
    RelatedFamily family;
    std::vector<ObjectSet> unions;     // admissible union per covering
    std::optional<ReductSet> reducts;  // maintained iff present
    std::uint64_t fingerprint;         // family digest at construction
    std::uint64_t generation;          // mutations applied so far
};

IncrementalState make_incremental_state(CoveringDecisionSystem system, bool with_reducts);

/// Result of an incremental related-family update.
struct UpdatedFamily {
    RelatedFamily family;
    ObjectSet admissible_union; // ∪A of the replacement covering
    std::size_t target;
    MutationKind kind;
};

/// Rewrite the related family for a refinement of covering `target`: objects
/// newly inside the replacement's admissible union gain index `target`
/// (entering the positive region if they were outside), all other related
/// sets are reused as-is.
///
/// Precondition: `replacement` passed verify_refinement against the current
/// target covering (advance() and the CLI verify; benchmark cells verify
/// outside their timed region).  A refinement that loses admissible objects
/// of the target covering breaks the reuse rule and is rejected with
/// NotARefinement even when block containment holds.
UpdatedFamily update_related_refine(const IncrementalState& state, const Covering& replacement,
                                    std::size_t target);

/// Coarsening counterpart: objects inside the replacement's admissible union
/// gain index `target`, all others lose it (dropping out of the positive
/// region when their related set empties).  Precondition as above; a
/// coarsening whose admissible union grows is rejected with NotACoarsening.
UpdatedFamily update_related_coarsen(const IncrementalState& state, const Covering& replacement,
                                     std::size_t target);

/// Updated reduct set, split into the verbatim-retained part (old reducts
/// avoiding the mutated index; empty when the positive region changed) and
/// the newly generated part (reducts through the mutated index).
struct IncrementalReducts {
    ReductSet reducts;   // retained ∪ generated, lexicographic
    ReductSet retained;
    ReductSet generated;
    bool pos_changed;
};

/// Maintain the full reduct set across a refinement without recomputing from
/// scratch.  POS unchanged: old reducts without the target index survive, and
/// new reducts are the minimal hitting sets of the unchanged related sets
/// outside the replacement's admissible union, each extended by the target
/// index and filtered against old reducts (absorption).  POS grown: only the
/// generated part remains.  Equals all_reducts(updated family) in all cases.
IncrementalReducts incremental_all_reducts_refine(const IncrementalState& state,
                                                  const UpdatedFamily& updated);

/// Coarsening counterpart.  POS unchanged: as above except the generated
/// terms are filtered only against old reducts that avoid the target index —
/// old reducts through the coarsened covering need not stay reducts, so they
/// must not absorb new terms.  POS shrunk: the whole reduct set is rebuilt
/// from the updated related sets (no target conjunct).
IncrementalReducts incremental_all_reducts_coarsen(const IncrementalState& state,
                                                   const UpdatedFamily& updated);

/// Incremental heuristics: the greedy cover of the updated minimal related
/// sets.  The saving over the from-scratch heuristic is that `updated`
/// reused every related set outside the mutated covering.
GreedyReduct ihvr(const IncrementalState& state, const UpdatedFamily& updated);
GreedyReduct ihvc(const IncrementalState& state, const UpdatedFamily& updated);

/// Verify the mutation, update the family (and the reduct set when the state
/// carries one) and produce the successor state with generation + 1.
IncrementalState advance(const IncrementalState& state, const CoveringMutation& mutation);

} // namespace covreduct
