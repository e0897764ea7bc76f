#pragma once

#include <cstddef>
#include <vector>

#include <covreduct/object_set.hpp>

namespace covreduct {

/// A covering of the universe: finite family of nonempty blocks whose union
/// is the whole universe.  Construction validates and silently drops duplicate
/// blocks (first occurrence kept, order otherwise preserved).
class Covering {
  public:
    Covering(std::size_t n, std::vector<ObjectSet> blocks);

    std::size_t universe_size() const { return n_; }
    std::size_t size() const { return blocks_.size(); }
    const ObjectSet& block(std::size_t b) const { return blocks_[b]; }
    const std::vector<ObjectSet>& blocks() const { return blocks_; }

    bool operator==(const Covering& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }

  private:
    std::size_t n_;
    std::vector<ObjectSet> blocks_;
};

/// Decision classes: nonempty, pairwise disjoint, union = universe.
class DecisionPartition {
  public:
    DecisionPartition(std::size_t n, std::vector<ObjectSet> classes);

    std::size_t universe_size() const { return n_; }
    std::size_t size() const { return classes_.size(); }
    const ObjectSet& decision_class(std::size_t d) const { return classes_[d]; }
    const std::vector<ObjectSet>& classes() const { return classes_; }

    bool operator==(const DecisionPartition& o) const {
        return n_ == o.n_ && classes_ == o.classes_;
    }

  private:
    std::size_t n_;
    std::vector<ObjectSet> classes_;
};

/// Covering decision information system (U, Δ, 𝒟): a universe of n objects,
/// an ordered family of coverings (condition attributes, indices 0..m-1) and
/// a decision partition.
class CoveringDecisionSystem {
  public:
    CoveringDecisionSystem(std::size_t n, std::vector<Covering> coverings,
                           DecisionPartition decision);

    std::size_t universe_size() const { return n_; }
    std::size_t covering_count() const { return coverings_.size(); }
    const Covering& covering(std::size_t i) const { return coverings_[i]; }
    const std::vector<Covering>& coverings() const { return coverings_; }
    const DecisionPartition& decision() const { return decision_; }

    /// Value-replace covering `target`; the result is re-validated.
    CoveringDecisionSystem with_covering(std::size_t target, Covering replacement) const;

    bool operator==(const CoveringDecisionSystem& o) const {
        return n_ == o.n_ && coverings_ == o.coverings_ && decision_ == o.decision_;
    }

  private:
    std::size_t n_;
    std::vector<Covering> coverings_;
    DecisionPartition decision_;
};

/// Build a system from plain id lists (the shape used by JSON fixtures):
/// coverings[i][b] lists the member ids of block b of covering i, decision[d]
/// the ids of class d.  Validates n ≥ 1, 1 ≤ m ≤ 64, id ranges, covering and
/// partition laws.
CoveringDecisionSystem
build_system(std::size_t n, const std::vector<std::vector<std::vector<std::size_t>>>& coverings,
             const std::vector<std::vector<std::size_t>>& decision);

/// Sub-system induced by a nonempty keep-set: object ids are re-densified in
/// increasing old-id order (the caller can recover old ids via
/// keep.to_indices(), which maps new id -> old id).  Blocks and decision
/// classes are intersected with keep; empties are dropped, duplicate blocks
/// dedup as usual.  restrict(s, U) == s.
CoveringDecisionSystem restrict_system(const CoveringDecisionSystem& s, const ObjectSet& keep);

} // namespace covreduct
