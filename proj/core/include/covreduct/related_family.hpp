#pragma once

#include <cstdint>
#include <vector>

#include <covreduct/covering_system.hpp>
#include <covreduct/index_set.hpp>

namespace covreduct {

/// One admissible block: a block of covering `covering` that is contained in
/// some decision class.  Multiplicity across coverings is preserved (the same
/// set admissible in two coverings yields two entries).
struct AdmissibleBlock {
    std::size_t covering;
    ObjectSet block;
};

/// All admissible blocks of the system, in (covering, block) order.
std::vector<AdmissibleBlock> admissible_blocks(const CoveringDecisionSystem& s);

/// Per covering i, the union of its admissible blocks.  The positive region
/// is the union of these, and the related set of x is {i : x ∈ union[i]}.
std::vector<ObjectSet> admissible_unions(const CoveringDecisionSystem& s);

/// The related family of a system: the positive region plus, for every
/// positive object x, its related set r(x) = the covering indices owning an
/// admissible block through x.  r(x) is nonempty exactly on the positive
/// region (empty sets are stored for the other objects).
class RelatedFamily {
  public:
    RelatedFamily(ObjectSet pos, std::vector<CoveringIndexSet> sets);

    std::size_t universe_size() const { return pos_.universe_size(); }
    const ObjectSet& pos() const { return pos_; }
    CoveringIndexSet related(std::size_t x) const { return sets_[x]; }
    const std::vector<CoveringIndexSet>& sets() const { return sets_; }

    /// Order-insensitive digest of (pos, per-object set sizes); incremental
    /// state uses it as a cheap staleness check.
    std::uint64_t fingerprint() const;

    bool operator==(const RelatedFamily& o) const {
        return pos_ == o.pos_ && sets_ == o.sets_;
    }

  private:
    ObjectSet pos_;
    std::vector<CoveringIndexSet> sets_;
};

/// Related set of a single object (direct evaluation; prefer related_family
/// when sets for many objects are needed).
CoveringIndexSet related_set(const CoveringDecisionSystem& s, std::size_t x);

/// Build the whole related family.
RelatedFamily related_family(const CoveringDecisionSystem& s);

/// The ⊆-minimal distinct related sets of positive objects (the antichain
/// the reduction algorithms hit).  Sorted lexicographically; empty iff the
/// positive region is empty.
std::vector<CoveringIndexSet> minimal_related_sets(const RelatedFamily& fam);

} // namespace covreduct
