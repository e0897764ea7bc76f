#pragma once

#include <cassert>
#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace covreduct {

/// Set of covering indices 0..m-1 packed into one 64-bit word (m ≤ 64 is
/// enforced at system construction).  Used for related sets r(x), antichain
/// members and reducts, where single-word AND/OR/popcount keep the hitting-set
/// search and greedy cover cheap.
class CoveringIndexSet {
  public:
    static constexpr std::size_t max_coverings = 64;

    CoveringIndexSet() = default;
    explicit CoveringIndexSet(std::uint64_t bits) : bits_(bits) {}

    CoveringIndexSet(std::initializer_list<std::size_t> ids) {
        for (std::size_t id : ids) set(id);
    }

    std::uint64_t bits() const { return bits_; }

    bool test(std::size_t i) const {
        assert(i < max_coverings);
        return (bits_ >> i) & 1u;
    }

    void set(std::size_t i) {
        assert(i < max_coverings);
        bits_ |= std::uint64_t{1} << i;
    }

    void reset(std::size_t i) {
        assert(i < max_coverings);
        bits_ &= ~(std::uint64_t{1} << i);
    }

    std::size_t count() const { return static_cast<std::size_t>(__builtin_popcountll(bits_)); }
    bool empty() const { return bits_ == 0; }

    bool contains(CoveringIndexSet other) const { return (other.bits_ & ~bits_) == 0; }
    bool intersects(CoveringIndexSet other) const { return (bits_ & other.bits_) != 0; }
    bool is_proper_subset_of(CoveringIndexSet other) const {
        return bits_ != other.bits_ && other.contains(*this);
    }

    CoveringIndexSet& operator|=(CoveringIndexSet o) { bits_ |= o.bits_; return *this; }
    CoveringIndexSet& operator&=(CoveringIndexSet o) { bits_ &= o.bits_; return *this; }
    CoveringIndexSet& operator-=(CoveringIndexSet o) { bits_ &= ~o.bits_; return *this; }

    friend CoveringIndexSet operator|(CoveringIndexSet a, CoveringIndexSet b) { return a |= b; }
    friend CoveringIndexSet operator&(CoveringIndexSet a, CoveringIndexSet b) { return a &= b; }
    friend CoveringIndexSet operator-(CoveringIndexSet a, CoveringIndexSet b) { return a -= b; }

    bool operator==(CoveringIndexSet o) const { return bits_ == o.bits_; }
    bool operator!=(CoveringIndexSet o) const { return bits_ != o.bits_; }

    /// Smallest member, or max_coverings when empty.
    std::size_t first() const {
        return bits_ ? static_cast<std::size_t>(__builtin_ctzll(bits_)) : max_coverings;
    }

    template <typename F>
    void for_each(F&& f) const {
        std::uint64_t w = bits_;
        while (w) {
            f(static_cast<std::size_t>(__builtin_ctzll(w)));
            w &= w - 1;
        }
    }

    std::vector<std::size_t> to_indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

  private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order over index sequences: {0,2} < {0,3} < {1}, and a set
/// precedes its proper supersets with the same prefix ({1} < {1,2}).
/// This is the canonical order for reduct lists and antichains.
inline bool lex_less(CoveringIndexSet a, CoveringIndexSet b) {
    std::uint64_t x = a.bits(), y = b.bits();
    while (x && y) {
        const int i = __builtin_ctzll(x), j = __builtin_ctzll(y);
        if (i != j) return i < j;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

} // namespace covreduct
