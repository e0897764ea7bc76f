#include <doctest.h>

#include <functional>

#include <covreduct/covering_system.hpp>
#include <covreduct/errors.hpp>
#include <covreduct/index_set.hpp>
#include <covreduct/json_io.hpp>
#include <covreduct/object_set.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace covreduct;

namespace {

errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    FAIL("expected a covreduct::error");
    return errc::invalid_argument;
}

} // namespace

TEST_SUITE_BEGIN("core");

TEST_CASE("object set basics") {
    ObjectSet s(70, {0, 63, 64, 69});
    CHECK(s.count() == 4);
    CHECK(s.test(63));
    CHECK(s.test(64));
    CHECK(!s.test(1));
    s.reset(63);
    CHECK(!s.test(63));
    CHECK(s.to_indices() == std::vector<std::size_t>{0, 64, 69});

    const ObjectSet a(8, {0, 1, 2});
    const ObjectSet b(8, {1, 2, 3});
    CHECK((a | b) == ObjectSet(8, {0, 1, 2, 3}));
    CHECK((a & b) == ObjectSet(8, {1, 2}));
    CHECK((a - b) == ObjectSet(8, {0}));
    CHECK(a.intersects(b));
    CHECK(!a.contains(b));
    CHECK(ObjectSet(8, {0, 1, 2, 3}).contains(a));
    CHECK(a.complement() == ObjectSet(8, {3, 4, 5, 6, 7}));
    CHECK(ObjectSet::full(70).count() == 70);
    CHECK(ObjectSet::full(70).is_full());
    CHECK(ObjectSet(5).empty());
    CHECK(ObjectSet(8, {4}).hash() != ObjectSet(8, {5}).hash());
}

TEST_CASE("covering index set and lexicographic order") {
    CoveringIndexSet p{0, 2};
    CHECK(p.count() == 2);
    CHECK(p.test(0));
    CHECK(p.test(2));
    CHECK(p.first() == 0);
    CHECK(p.to_indices() == std::vector<std::size_t>{0, 2});
    CHECK(CoveringIndexSet{}.first() == CoveringIndexSet::max_coverings);
    CHECK(CoveringIndexSet{0}.is_proper_subset_of(p));
    CHECK(!p.is_proper_subset_of(p));

    // {0,2} < {0,3} < {1} < {1,2}; a set precedes its own supersets.
    CHECK(lex_less({0, 2}, {0, 3}));
    CHECK(lex_less({0, 3}, {1}));
    CHECK(lex_less({1}, {1, 2}));
    CHECK(!lex_less({1, 2}, {1}));
    CHECK(!lex_less({0, 2}, {0, 2}));
}

TEST_CASE("covering validation") {
    CHECK_NOTHROW(Covering(3, {ObjectSet(3, {0, 1}), ObjectSet(3, {2})}));

    CHECK(code_of([] { Covering(0, {}); }) == errc::invalid_argument);
    CHECK(code_of([] { Covering(3, {}); }) == errc::not_a_covering);
    CHECK(code_of([] {
        Covering(3, {ObjectSet(3, {0, 1}), ObjectSet(3)});
    }) == errc::empty_block);
    CHECK(code_of([] { Covering(3, {ObjectSet(3, {0, 1})}); }) == errc::not_a_covering);
    CHECK(code_of([] {
        Covering(3, {ObjectSet(4, {0, 1, 2, 3})});
    }) == errc::universe_mismatch);

    // Duplicate blocks collapse to the first occurrence; order is kept.
    Covering dup(3, {ObjectSet(3, {0, 1}), ObjectSet(3, {2}), ObjectSet(3, {0, 1})});
    CHECK(dup.size() == 2);
    CHECK(dup.block(0) == ObjectSet(3, {0, 1}));
    CHECK(dup.block(1) == ObjectSet(3, {2}));
}

TEST_CASE("decision partition validation") {
    CHECK_NOTHROW(DecisionPartition(3, {ObjectSet(3, {0, 2}), ObjectSet(3, {1})}));
    CHECK(code_of([] {
        DecisionPartition(3, {ObjectSet(3, {0, 1}), ObjectSet(3, {1, 2})});
    }) == errc::not_a_partition);
    CHECK(code_of([] {
        DecisionPartition(3, {ObjectSet(3, {0, 1})});
    }) == errc::not_a_partition);
    CHECK(code_of([] {
        DecisionPartition(3, {ObjectSet(3, {0, 1, 2}), ObjectSet(3)});
    }) == errc::not_a_partition);
}

TEST_CASE("build_system accepts the worked fixtures") {
    const auto s = fx::consistent8();
    CHECK(s.universe_size() == 8);
    CHECK(s.covering_count() == 5);
    CHECK(s.decision().size() == 3);
    CHECK(s.covering(0).size() == 6);
    CHECK(s.covering(1).size() == 5);

    const auto t = fx::inconsistent8();
    CHECK(t.covering_count() == 5);
    CHECK(t.covering(0).size() == 4);
}

TEST_CASE("build_system trivial and error cases") {
    const auto one = build_system(1, {{{0}}}, {{0}});
    CHECK(one.universe_size() == 1);
    CHECK(one.covering_count() == 1);

    CHECK(code_of([] {
        build_system(3, {{{0, 1}}}, {{0}, {1}, {2}});
    }) == errc::not_a_covering);
    CHECK(code_of([] { build_system(0, {}, {}); }) == errc::invalid_argument);
    CHECK(code_of([] { build_system(2, {}, {{0, 1}}); }) == errc::invalid_argument);
    CHECK(code_of([] { build_system(2, {{{0, 1, 5}}}, {{0, 1}}); }) == errc::universe_mismatch);
}

TEST_CASE("with_covering replaces one covering by value") {
    const auto s = fx::consistent8();
    const auto r = s.with_covering(4, fx::refined_consistent8());
    CHECK(r.covering(4) == fx::refined_consistent8());
    CHECK(r.covering(0) == s.covering(0));
    CHECK(s.covering(4).size() == 5); // original untouched
    CHECK(code_of([&] { (void)s.with_covering(9, fx::refined_consistent8()); }) ==
          errc::invalid_argument);
}

TEST_CASE("restrict_system intersects blocks and re-densifies ids") {
    const auto s = fx::consistent8();
    const auto sub = restrict_system(s, ObjectSet(8, {0, 1, 2, 3}));
    CHECK(sub.universe_size() == 4);
    CHECK(sub.covering_count() == 5);

    using oracle::block_set;
    CHECK(block_set(sub.covering(0)) ==
          std::set<oracle::Block>{{0}, {0, 1}, {2}, {2, 3}});
    CHECK(block_set(sub.covering(1)) == std::set<oracle::Block>{{0, 1, 2}, {2, 3}, {3}});
    CHECK(block_set(sub.covering(2)) == std::set<oracle::Block>{{0, 1, 3}, {2, 3}, {2}, {3}});
    CHECK(block_set(sub.covering(3)) == std::set<oracle::Block>{{0, 1}, {1, 2, 3}, {2}, {3}});
    CHECK(block_set(sub.covering(4)) == std::set<oracle::Block>{{0, 1}, {1, 2}, {3}, {2}});
    CHECK(block_set(Covering(4, sub.decision().classes())) ==
          std::set<oracle::Block>{{0, 1}, {2, 3}});
}

TEST_CASE("restrict_system keeps non-contiguous ids in increasing order") {
    const auto s = fx::consistent8();
    const ObjectSet keep(8, {1, 4, 6});
    const auto sub = restrict_system(s, keep);
    CHECK(sub.universe_size() == 3);
    // New id j corresponds to the j-th kept old id.
    CHECK(keep.to_indices() == std::vector<std::size_t>{1, 4, 6});
    // Covering 4 blocks {0,1},{1,2,4},{3,4,6},{5},{2,6,7} intersect to
    // {1}->{0}, {1,4}->{0,1}, {4,6}->{1,2}, {6}->{2}.
    CHECK(oracle::block_set(sub.covering(4)) ==
          std::set<oracle::Block>{{0}, {0, 1}, {1, 2}, {2}});
}

TEST_CASE("restrict_system identity and errors") {
    const auto s = fx::consistent8();
    CHECK(restrict_system(s, ObjectSet::full(8)) == s);
    CHECK(code_of([&] { (void)restrict_system(s, ObjectSet(8)); }) == errc::empty_restriction);
    CHECK(code_of([&] { (void)restrict_system(s, ObjectSet(5, {0})); }) ==
          errc::universe_mismatch);
}

TEST_CASE("system json round trip") {
    testutil::TempDir dir;
    const auto s = fx::inconsistent8();
    const auto path = dir.file("system.json");
    save_system(s, path);
    CHECK(load_system(path) == s);

    const auto text = system_to_json(s);
    CHECK(system_from_json(text) == s);
}

TEST_CASE("system json rejects malformed input") {
    CHECK(code_of([] { (void)system_from_json("{not json"); }) == errc::parse_error);
    CHECK(code_of([] { (void)system_from_json(R"({"n": 2})"); }) == errc::parse_error);
    CHECK(code_of([] {
        (void)system_from_json(R"({"n": 2, "coverings": [[[0, 1]]], "decision": [[0, -1]]})");
    }) == errc::parse_error);
    // Structurally fine JSON whose content breaks the covering laws surfaces
    // the domain error, not a parse error.
    CHECK(code_of([] {
        (void)system_from_json(R"({"n": 3, "coverings": [[[0, 1]]], "decision": [[0, 1, 2]]})");
    }) == errc::not_a_covering);
    CHECK(code_of([] { (void)load_system("/nonexistent/covreduct.json"); }) == errc::io_error);
}

TEST_CASE("mutation json round trip") {
    testutil::TempDir dir;
    const CoveringMutation m{4, MutationKind::refine, fx::refined_consistent8()};
    const auto path = dir.file("mutation.json");
    save_mutation(m, path);
    const auto back = load_mutation(path, 8);
    CHECK(back.target == 4);
    CHECK(back.kind == MutationKind::refine);
    CHECK(back.covering == m.covering);

    const CoveringMutation c{4, MutationKind::coarsen, fx::coarsened_consistent8()};
    const auto back2 = mutation_from_json(mutation_to_json(c), 8);
    CHECK(back2.kind == MutationKind::coarsen);
    CHECK(back2.covering == c.covering);

    CHECK(code_of([] {
        (void)mutation_from_json(R"({"target": 0, "kind": "sideways", "blocks": [[0]]})", 1);
    }) == errc::parse_error);
}

TEST_SUITE_END();
