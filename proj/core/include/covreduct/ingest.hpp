#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <covreduct/covering_system.hpp>

namespace covreduct {

/// Rectangular numeric table with one categorical decision column.
/// Conditional values are stored column-major (columns[j][row]).
struct NumericTable {
    std::vector<std::string> attribute_names;  // conditional columns, size a
    std::vector<std::vector<double>> columns;  // a columns of n values each
    std::vector<std::string> labels;           // decision labels, size n

    std::size_t rows() const { return labels.size(); }
    std::size_t attributes() const { return columns.size(); }
};

/// Load a comma-separated file with a header row.  `decision_column` selects
/// the categorical column by header name; empty string means the last column.
/// Conditional cells must parse as reals; a missing/extra cell is a parse
/// error with its line number.
NumericTable load_csv(const std::string& path, const std::string& decision_column = "");

/// Per-attribute min-max normalization onto [0,1]; constant columns map to 0
/// everywhere.  Idempotent.
NumericTable normalize(NumericTable table);

/// Neighborhood covering of one attribute: blocks are the distinct
/// neighborhoods N(x) = {y : |v(x) − v(y)| ≤ epsilon}.  Always a covering
/// (x ∈ N(x)).
Covering neighborhood_covering(const NumericTable& table, std::size_t attribute, double epsilon);

/// Covering decision information system of a normalized table: one
/// neighborhood covering per conditional attribute (or, with joint=true, a
/// single covering using the Euclidean distance over all attributes),
/// decision classes grouped by label in first-appearance order.
CoveringDecisionSystem build_cdis(const NumericTable& table, double epsilon, bool joint = false);

/// Result of a mutation generator; `changed` is false when nothing was
/// applicable (all blocks singletons / single block) and the covering is the
/// input unchanged — callers should surface a warning.
struct MutationOutcome {
    Covering covering;
    bool changed;
};

/// Split ⌈intensity·|blocks|⌉ randomly chosen blocks of size ≥ 2 into two
/// nonempty disjoint parts each.  Deterministic in (input, seed); the result
/// always satisfies verify_refinement against the input.
MutationOutcome random_refine(const Covering& covering, std::uint64_t seed, double intensity);

/// Merge ⌈intensity·|blocks|/2⌉ randomly chosen disjoint pairs of blocks into
/// their unions.  Deterministic in (input, seed); the result always satisfies
/// verify_coarsening against the input.
MutationOutcome random_coarsen(const Covering& covering, std::uint64_t seed, double intensity);

} // namespace covreduct
