#pragma once

#include <cassert>
#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace covreduct {

/// Fixed-universe bitset over object ids 0..n-1.
///
/// The value currency of the whole library: blocks, decision classes and
/// regions are all ObjectSets over the same universe.  All binary operations
/// require equal universe sizes (checked by assert; mixing universes is a
/// programming error, not an input error).
class ObjectSet {
  public:
    ObjectSet() = default;

    explicit ObjectSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    ObjectSet(std::size_t n, std::initializer_list<std::size_t> ids) : ObjectSet(n) {
        for (std::size_t id : ids) set(id);
    }

    static ObjectSet full(std::size_t n) {
        ObjectSet s(n);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    std::size_t universe_size() const { return n_; }

    bool test(std::size_t i) const {
        assert(i < n_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i) {
        assert(i < n_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) {
        assert(i < n_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_full() const {
        return count() == n_;
    }

    /// other ⊆ *this
    bool contains(const ObjectSet& other) const {
        assert(n_ == other.n_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (other.words_[k] & ~words_[k]) return false;
        return true;
    }

    bool intersects(const ObjectSet& other) const {
        assert(n_ == other.n_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }

    ObjectSet& operator|=(const ObjectSet& o) {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }

    ObjectSet& operator&=(const ObjectSet& o) {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }

    /// set difference: *this ∖ o
    ObjectSet& operator-=(const ObjectSet& o) {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend ObjectSet operator|(ObjectSet a, const ObjectSet& b) { return a |= b; }
    friend ObjectSet operator&(ObjectSet a, const ObjectSet& b) { return a &= b; }
    friend ObjectSet operator-(ObjectSet a, const ObjectSet& b) { return a -= b; }

    ObjectSet complement() const {
        ObjectSet r(n_);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
        r.trim();
        return r;
    }

    bool operator==(const ObjectSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const ObjectSet& o) const { return !(*this == o); }

    /// Deterministic order usable as a map key (universe first, then words).
    bool operator<(const ObjectSet& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return words_ < o.words_;
    }

    /// 64-bit FNV-1a over the payload words; used for dedup tables and
    /// incremental-state fingerprints.
    std::uint64_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }

    /// Invoke f(id) for every member in increasing order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                const int b = __builtin_ctzll(w);
                f(k * 64 + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> to_indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

  private:
    void trim() {
        if (n_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace covreduct
