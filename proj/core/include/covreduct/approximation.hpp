#pragma once

#include <covreduct/covering_system.hpp>

namespace covreduct {

/// Union covering ∪Δ: all blocks of all coverings of the system, exact
/// duplicates across coverings dropped (first occurrence kept).
Covering union_covering(const CoveringDecisionSystem& s);

/// Minimal description Md(x): the ⊆-minimal blocks of the covering that
/// contain x.  Nonempty for every x (coverings leave no object uncovered).
std::vector<ObjectSet> minimal_description(const Covering& c, std::size_t x);

/// Third-type lower approximation: union of the blocks contained in X.
ObjectSet lower_approx(const Covering& c, const ObjectSet& x);

/// Third-type upper approximation: union of the minimal-description blocks
/// of the members of X.  lower_approx(c,X) ⊆ X ⊆ upper_approx(c,X) always.
ObjectSet upper_approx(const Covering& c, const ObjectSet& x);

/// Positive region of the decision w.r.t. ∪Δ: union over decision classes of
/// their lower approximations.
ObjectSet positive_region(const CoveringDecisionSystem& s);

struct Regions {
    ObjectSet positive; // lower approximation of X under ∪Δ
    ObjectSet boundary; // upper ∖ lower
    ObjectSet negative; // complement of upper
};

/// Positive / boundary / negative regions of an arbitrary target set X under
/// the union covering.
Regions classify_regions(const CoveringDecisionSystem& s, const ObjectSet& x);

/// The system is consistent iff the positive region is the whole universe.
bool is_consistent(const CoveringDecisionSystem& s);

} // namespace covreduct
