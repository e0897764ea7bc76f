#pragma once

#include <vector>

#include <covreduct/covering_system.hpp>
#include <covreduct/index_set.hpp>
#include <covreduct/related_family.hpp>

namespace covreduct {

/// A set of reducts: pairwise ⊆-incomparable covering-index sets in
/// lexicographic order.  {∅} (one empty member) is the degenerate result for
/// systems with an empty positive region.
using ReductSet = std::vector<CoveringIndexSet>;

/// All ⊆-minimal hitting sets of a family of index sets, in lexicographic
/// order.  An empty family (after absorption) yields {∅}; a family containing
/// an empty set is rejected (nothing can hit it).
ReductSet minimal_hitting_sets(std::vector<CoveringIndexSet> family);

/// Every attribute reduct of the system: the minimal hitting sets of the
/// minimal related sets.  Each reduct P is a ⊆-minimal covering subset with
/// POS_{∪P} = POS_{∪Δ}.
ReductSet all_reducts(const RelatedFamily& fam);

/// True iff P preserves the positive region (first reduct condition only).
bool preserves_positive_region(const CoveringDecisionSystem& s, CoveringIndexSet p);

/// True iff P preserves the positive region and no proper subset does.
/// is_reduct(s, ∅) holds exactly when the positive region is empty.
bool is_reduct(const CoveringDecisionSystem& s, CoveringIndexSet p);

/// Outcome of the greedy heuristic.  `vacuous` flags the degenerate run on an
/// empty antichain (empty positive region): the reduct is ∅ and callers
/// should surface a warning.
struct GreedyReduct {
    CoveringIndexSet reduct;
    bool vacuous = false;
};

/// Greedy cover of the minimal related sets: repeatedly take the covering
/// index hitting the most still-uncovered sets (lowest index on ties), then
/// drop redundant picks in reverse selection order.  The result hits every
/// set of `sr`, hence preserves the positive region; it need not be globally
/// minimum.
GreedyReduct heuristic_reduct(const std::vector<CoveringIndexSet>& sr);

} // namespace covreduct
