// Micro-benchmarks for the covering-reduction primitives: related-family
// construction (scratch vs incremental), antichain extraction, the greedy
// heuristic and minimal-hitting-set enumeration.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include <covreduct/covering_system.hpp>
#include <covreduct/dynamic_update.hpp>
#include <covreduct/ingest.hpp>
#include <covreduct/reduct.hpp>
#include <covreduct/related_family.hpp>
#include <covreduct/rng.hpp>

namespace {

using namespace covreduct;

/// Clustered numeric table: `classes` label groups with separated per-class
/// attribute means plus small noise, so ε-neighborhood coverings produce a
/// nontrivial but mostly-positive system.
NumericTable synthetic_table(std::size_t n, std::size_t attrs, std::size_t classes,
                             std::uint64_t seed) {
    Rng rng(seed);
    NumericTable t;
    t.attribute_names.resize(attrs);
    t.columns.assign(attrs, std::vector<double>(n));
    t.labels.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        const std::size_t c = x % classes;
        t.labels[x] = "c" + std::to_string(c);
        for (std::size_t j = 0; j < attrs; ++j) {
            const double mean = static_cast<double>((c + j) % classes) /
                                static_cast<double>(classes);
            t.columns[j][x] = mean + 0.25 * (rng.unit() - 0.5);
        }
    }
    return t;
}

CoveringDecisionSystem synthetic_system(std::size_t n, std::size_t attrs) {
    return build_cdis(normalize(synthetic_table(n, attrs, 3, 7)), 0.05, false);
}

void bm_build_cdis(benchmark::State& state) {
    const auto table = normalize(synthetic_table(static_cast<std::size_t>(state.range(0)), 8, 3, 7));
    for (auto _ : state) {
        auto s = build_cdis(table, 0.05, false);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(bm_build_cdis)->Arg(200)->Arg(1000);

void bm_related_family_scratch(benchmark::State& state) {
    const auto s = synthetic_system(static_cast<std::size_t>(state.range(0)), 8);
    for (auto _ : state) {
        auto fam = related_family(s);
        benchmark::DoNotOptimize(fam);
    }
}
BENCHMARK(bm_related_family_scratch)->Arg(200)->Arg(1000)->Arg(4000);

void bm_update_refine_incremental(benchmark::State& state) {
    const auto s = synthetic_system(static_cast<std::size_t>(state.range(0)), 8);
    const std::size_t target = s.covering_count() - 1;
    const auto mut = random_refine(s.covering(target), 11, 0.3);
    const auto st = make_incremental_state(s, false);
    for (auto _ : state) {
        auto upd = update_related_refine(st, mut.covering, target);
        benchmark::DoNotOptimize(upd);
    }
}
BENCHMARK(bm_update_refine_incremental)->Arg(200)->Arg(1000)->Arg(4000);

void bm_update_refine_scratch(benchmark::State& state) {
    const auto s = synthetic_system(static_cast<std::size_t>(state.range(0)), 8);
    const std::size_t target = s.covering_count() - 1;
    const auto mut = random_refine(s.covering(target), 11, 0.3);
    const auto mutated = s.with_covering(target, mut.covering);
    for (auto _ : state) {
        auto fam = related_family(mutated);
        benchmark::DoNotOptimize(fam);
    }
}
BENCHMARK(bm_update_refine_scratch)->Arg(200)->Arg(1000)->Arg(4000);

void bm_minimal_related_sets(benchmark::State& state) {
    const auto fam = related_family(synthetic_system(static_cast<std::size_t>(state.range(0)), 8));
    for (auto _ : state) {
        auto sr = minimal_related_sets(fam);
        benchmark::DoNotOptimize(sr);
    }
}
BENCHMARK(bm_minimal_related_sets)->Arg(1000)->Arg(4000);

void bm_heuristic_reduct(benchmark::State& state) {
    const auto sr =
        minimal_related_sets(related_family(synthetic_system(static_cast<std::size_t>(state.range(0)), 8)));
    for (auto _ : state) {
        auto g = heuristic_reduct(sr);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(bm_heuristic_reduct)->Arg(1000)->Arg(4000);

void bm_minimal_hitting_sets(benchmark::State& state) {
    // random clause family over `m` indices; enumeration cost grows with m
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    Rng rng(13);
    std::vector<CoveringIndexSet> family;
    for (std::size_t c = 0; c < 24; ++c) {
        CoveringIndexSet clause;
        for (std::size_t i = 0; i < m; ++i)
            if (rng.below(3) == 0) clause.set(i);
        if (clause.empty()) clause.set(rng.below(m));
        family.push_back(clause);
    }
    for (auto _ : state) {
        auto hs = minimal_hitting_sets(family);
        benchmark::DoNotOptimize(hs);
    }
}
BENCHMARK(bm_minimal_hitting_sets)->Arg(8)->Arg(12)->Arg(16);

} // namespace
