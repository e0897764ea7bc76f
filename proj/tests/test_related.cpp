#include <doctest.h>

#include <covreduct/approximation.hpp>
#include <covreduct/related_family.hpp>
#include <covreduct/rng.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace covreduct;

TEST_SUITE_BEGIN("related");

TEST_CASE("admissible blocks of the worked consistent system") {
    const auto s = fx::consistent8();
    const auto blocks = admissible_blocks(s);
    // Covering 1 contributes exactly {2,3}, {4} and {5,6,7}.
    std::set<oracle::Block> of_c1;
    for (const auto& ab : blocks)
        if (ab.covering == 1) of_c1.insert(oracle::to_std(ab.block));
    CHECK(of_c1 == std::set<oracle::Block>{{2, 3}, {4}, {5, 6, 7}});
    for (const auto& ab : blocks) {
        bool inside_class = false;
        for (const auto& d : s.decision().classes())
            if (d.contains(ab.block)) inside_class = true;
        CHECK(inside_class);
    }
}

TEST_CASE("admissible blocks trivial cases") {
    // Single decision class: every block qualifies, multiplicity preserved.
    const auto all = build_system(3, {{{0, 1}, {1, 2}}, {{0, 1, 2}}}, {{0, 1, 2}});
    CHECK(admissible_blocks(all).size() == 3);

    // Singleton classes but no singleton blocks: nothing qualifies.
    const auto none = build_system(2, {{{0, 1}}}, {{0}, {1}});
    CHECK(admissible_blocks(none).empty());
    CHECK(admissible_unions(none)[0] == ObjectSet(2));
}

TEST_CASE("related sets of the worked consistent system") {
    const auto s = fx::consistent8();
    CHECK(related_set(s, 0) == CoveringIndexSet{0, 3, 4});
    CHECK(related_set(s, 1) == CoveringIndexSet{0, 3, 4});
    CHECK(related_set(s, 2) == CoveringIndexSet{0, 1, 2, 3});
    CHECK(related_set(s, 3) == CoveringIndexSet{0, 1, 2, 3});
    CHECK(related_set(s, 4) == CoveringIndexSet{0, 1, 2, 3});
    CHECK(related_set(s, 5) == CoveringIndexSet{0, 1, 2, 3, 4});
    CHECK(related_set(s, 6) == CoveringIndexSet{1, 2});
    CHECK(related_set(s, 7) == CoveringIndexSet{1, 2});
}

TEST_CASE("related sets of the worked inconsistent system") {
    const auto s = fx::inconsistent8();
    CHECK(related_set(s, 0) == CoveringIndexSet{1, 3});
    CHECK(related_set(s, 1) == CoveringIndexSet{});
    CHECK(related_set(s, 2) == CoveringIndexSet{});
    CHECK(related_set(s, 3) == CoveringIndexSet{1, 2, 3});
    CHECK(related_set(s, 4) == CoveringIndexSet{1, 2, 3});
    CHECK(related_set(s, 5) == CoveringIndexSet{0, 4});
    CHECK(related_set(s, 6) == CoveringIndexSet{0, 2, 4});
    CHECK(related_set(s, 7) == CoveringIndexSet{0, 2, 4});
}

TEST_CASE("related family matches per-object evaluation and regions") {
    for (const auto& s : {fx::consistent8(), fx::inconsistent8()}) {
        const auto fam = related_family(s);
        CHECK(fam.pos() == positive_region(s));
        for (std::size_t x = 0; x < 8; ++x) {
            CHECK(fam.related(x) == related_set(s, x));
            CHECK(fam.related(x).empty() == !fam.pos().test(x));
        }
    }
}

TEST_CASE("related family distinct sets of the inconsistent system") {
    const auto fam = related_family(fx::inconsistent8());
    std::set<std::uint64_t> distinct;
    for (std::size_t x = 0; x < 8; ++x)
        if (fam.pos().test(x)) distinct.insert(fam.related(x).bits());
    CHECK(distinct == std::set<std::uint64_t>{
                          CoveringIndexSet{1, 3}.bits(),
                          CoveringIndexSet{1, 2, 3}.bits(),
                          CoveringIndexSet{0, 4}.bits(),
                          CoveringIndexSet{0, 2, 4}.bits(),
                      });
}

TEST_CASE("single consistent covering relates every object to it") {
    const auto s = build_system(4, {{{0, 1}, {2, 3}}}, {{0, 1}, {2, 3}});
    const auto fam = related_family(s);
    CHECK(fam.pos() == ObjectSet::full(4));
    for (std::size_t x = 0; x < 4; ++x) CHECK(fam.related(x) == CoveringIndexSet{0});
}

TEST_CASE("admissible unions drive the positive region") {
    Rng rng(4242);
    for (int round = 0; round < 80; ++round) {
        const auto s = oracle::random_system(rng);
        const auto unions = admissible_unions(s);
        REQUIRE(unions.size() == s.covering_count());
        ObjectSet any(s.universe_size());
        for (const auto& u : unions) any |= u;
        CHECK(any == positive_region(s));

        const auto fam = related_family(s);
        CHECK(fam.pos() == any);
        for (std::size_t x = 0; x < s.universe_size(); ++x) {
            const auto naive = oracle::naive_related(s, x);
            const auto got = fam.related(x).to_indices();
            CHECK(oracle::Block(got.begin(), got.end()) ==
                  oracle::Block(naive.begin(), naive.end()));
        }
    }
}

TEST_CASE("minimal related sets of the worked systems") {
    const auto sr1 = minimal_related_sets(related_family(fx::consistent8()));
    CHECK(testutil::indices(sr1) ==
          std::vector<std::vector<std::size_t>>{{0, 3, 4}, {1, 2}});

    const auto sr2 = minimal_related_sets(related_family(fx::inconsistent8()));
    CHECK(testutil::indices(sr2) == std::vector<std::vector<std::size_t>>{{0, 4}, {1, 3}});
}

TEST_CASE("minimal related sets trivial cases") {
    // All related sets identical: singleton antichain.
    const auto s = build_system(4, {{{0, 1}, {2, 3}}, {{0, 1, 2, 3}}}, {{0, 1}, {2, 3}});
    const auto sr = minimal_related_sets(related_family(s));
    REQUIRE(sr.size() == 1);
    CHECK(sr[0] == CoveringIndexSet{0});

    // Empty positive region: empty antichain.
    const auto empty = build_system(2, {{{0, 1}}}, {{0}, {1}});
    CHECK(minimal_related_sets(related_family(empty)).empty());
}

TEST_CASE("minimal related sets form a sorted antichain on random systems") {
    Rng rng(515151);
    for (int round = 0; round < 80; ++round) {
        const auto s = oracle::random_system(rng);
        const auto sr = minimal_related_sets(related_family(s));
        for (std::size_t i = 0; i < sr.size(); ++i) {
            CHECK(!sr[i].empty());
            for (std::size_t j = 0; j < sr.size(); ++j)
                if (i != j) CHECK(!sr[i].is_proper_subset_of(sr[j]));
            if (i + 1 < sr.size()) CHECK(lex_less(sr[i], sr[i + 1]));
        }
        // Every related set of a positive object must contain some minimal set.
        const auto fam = related_family(s);
        for (std::size_t x = 0; x < s.universe_size(); ++x) {
            if (!fam.pos().test(x)) continue;
            bool dominated = false;
            for (auto m : sr)
                if (fam.related(x).contains(m)) dominated = true;
            CHECK(dominated);
        }
    }
}

TEST_CASE("fingerprint reacts to family changes") {
    const auto f1 = related_family(fx::consistent8());
    const auto f2 = related_family(fx::inconsistent8());
    CHECK(f1.fingerprint() == related_family(fx::consistent8()).fingerprint());
    CHECK(f1.fingerprint() != f2.fingerprint());
}

TEST_SUITE_END();
