#pragma once

#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

namespace covreduct {

/// Deterministic RNG: splitmix64, version 1.  The algorithm is fixed as part
/// of the interface — a given seed must reproduce the same stream on every
/// platform and in every future release, because mutation generators and the
/// benchmark harness derive their entire behaviour from it.  (std::mt19937_64
/// is portable, but std::uniform_int_distribution is not; hence the explicit
/// rejection reduction below.)
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, bound), bound ≥ 1.  Unbiased: rejection from the
    /// smallest power-of-two window covering the bound.
    std::uint64_t below(std::uint64_t bound) {
        assert(bound >= 1);
        if (bound == 1) return 0;
        const int bits = 64 - __builtin_clzll(bound - 1);
        const std::uint64_t mask = (bits >= 64) ? ~std::uint64_t{0}
                                                : ((std::uint64_t{1} << bits) - 1);
        std::uint64_t v;
        do {
            v = next() & mask;
        } while (v >= bound);
        return v;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

  private:
    std::uint64_t state_;
};

} // namespace covreduct
