#pragma once

// Hand-worked 8-object fixtures shared across the suite.  Both systems use
// five coverings over U = {0..7} and the decision {{0,1},{2,3,4},{5,6,7}};
// the first has a full positive region, the second leaves objects 1 and 2
// unclassifiable.  The refined/coarsened variants replace the last covering
// (index 4) and are used by the dynamic-update tests.  Expected reducts,
// related sets and region contents asserted in the tests were derived by
// hand from these block lists.

#include <covreduct/covering_system.hpp>
#include <covreduct/dynamic_update.hpp>

namespace fx {

inline covreduct::CoveringDecisionSystem consistent8() {
    return covreduct::build_system(
        8,
        {
            {{0}, {0, 1}, {2, 4}, {2, 3, 4}, {5}, {4, 6, 7}},
            {{0, 1, 2}, {2, 3}, {3, 4, 5}, {4}, {5, 6, 7}},
            {{0, 1, 3}, {2, 3, 4}, {2}, {3, 4, 5}, {5, 6, 7}},
            {{0, 1}, {1, 2, 3}, {2}, {3, 4}, {5}, {4, 6, 7}},
            {{0, 1}, {1, 2, 4}, {3, 4, 6}, {5}, {2, 6, 7}},
        },
        {{0, 1}, {2, 3, 4}, {5, 6, 7}});
}

inline covreduct::CoveringDecisionSystem inconsistent8() {
    return covreduct::build_system(
        8,
        {
            {{0, 2}, {1, 3, 4}, {3, 4, 5}, {5, 6, 7}},
            {{0}, {1, 2, 3, 5}, {3, 4}, {4, 5, 6, 7}},
            {{0, 1, 2, 6}, {3, 4}, {3, 4, 5, 6}, {6, 7}},
            {{0}, {1, 2, 4, 5}, {3, 4}, {3, 5, 6, 7}},
            {{0, 1, 2, 4}, {1, 3, 4, 5}, {5}, {6, 7}},
        },
        {{0, 1}, {2, 3, 4}, {5, 6, 7}});
}

inline covreduct::ObjectSet block8(std::initializer_list<std::size_t> ids) {
    return covreduct::ObjectSet(8, ids);
}

/// Refinement of consistent8's covering 4: {2,6,7} split into {2,6} and {7}.
inline covreduct::Covering refined_consistent8() {
    return covreduct::Covering(
        8, {block8({0, 1}), block8({1, 2, 4}), block8({3, 4, 6}), block8({5}), block8({2, 6}),
            block8({7})});
}

/// Refinement of inconsistent8's covering 4: every block split or shrunk.
inline covreduct::Covering refined_inconsistent8() {
    return covreduct::Covering(
        8, {block8({0}), block8({1, 2, 4}), block8({1, 3}), block8({4, 5}), block8({5}),
            block8({6, 7})});
}

/// Coarsening of consistent8's covering 4: {0,1} and {1,2,4} merged.
inline covreduct::Covering coarsened_consistent8() {
    return covreduct::Covering(
        8, {block8({0, 1, 2, 4}), block8({3, 4, 6}), block8({5}), block8({2, 6, 7})});
}

/// Coarsening of inconsistent8's covering 4: {5} and {6,7} merged.
inline covreduct::Covering coarsened_inconsistent8() {
    return covreduct::Covering(
        8, {block8({0, 1, 2, 4}), block8({1, 3, 4, 5}), block8({5, 6, 7})});
}

} // namespace fx
