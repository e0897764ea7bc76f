#pragma once

#include <string>

#include <covreduct/covering_system.hpp>
#include <covreduct/dynamic_update.hpp>

namespace covreduct {

/// System schema: {"n": 8, "coverings": [[[ids]...]...], "decision": [[ids]...]}.
CoveringDecisionSystem system_from_json(const std::string& text);
std::string system_to_json(const CoveringDecisionSystem& s);
CoveringDecisionSystem load_system(const std::string& path);
void save_system(const CoveringDecisionSystem& s, const std::string& path);

/// Mutation schema: {"target": 4, "kind": "refine"|"coarsen", "blocks": [[ids]...]}.
/// `universe` is the object count of the system the mutation applies to.
CoveringMutation mutation_from_json(const std::string& text, std::size_t universe);
std::string mutation_to_json(const CoveringMutation& m);
CoveringMutation load_mutation(const std::string& path, std::size_t universe);
void save_mutation(const CoveringMutation& m, const std::string& path);

} // namespace covreduct
