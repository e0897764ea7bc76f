#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <covreduct/dynamic_update.hpp>

namespace covreduct {

enum class BenchAlgo { nihv, ihvr, ihvc, all_exact, all_incr };

const char* bench_algo_name(BenchAlgo a) noexcept;

/// Benchmark protocol: for each fraction p, restrict the dataset's system to
/// its first ⌈p·n/100⌉ objects (nested prefixes; optionally of a seeded
/// shuffle of the object order), generate one seeded mutation of the last
/// covering, and time each algorithm `repeats` times on that cell.
struct BenchConfig {
    std::string dataset;        // .json system or .csv table
    double epsilon = 0.05;
    std::vector<int> fractions = {10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
    std::size_t repeats = 10;
    MutationKind mode = MutationKind::refine;
    std::uint64_t seed = 1;
    std::vector<BenchAlgo> algorithms;  // empty = NIHV + the mode's incremental heuristic
    double intensity = 0.3;
    std::optional<std::uint64_t> shuffle_seed; // permute object order before nesting
    double cell_timeout_s = 600.0;
    std::string decision_column;        // CSV only; empty = last
    bool joint = false;                 // CSV only: single joint covering
};

struct BenchRow {
    std::string dataset;
    int fraction;
    std::string algorithm;
    double mean_s;
    double std_s;        // sample standard deviation (0 when repeats == 1)
    double reduct_size;  // heuristic: |reduct|; exact: number of reducts
    double pos_fraction; // |POS| / n of the mutated sub-system
    std::vector<double> raw_s; // per-repeat timings (batch-averaged for
                               // sub-millisecond cells), kept for the JSON audit trail
};

struct BenchReport {
    std::vector<BenchRow> rows;
};

/// Run the sweep.  Timed regions cover exactly the algorithm under test
/// (from-scratch family + greedy for NIHV, update + greedy for IHVR/IHVC,
/// analogous for the exact variants); I/O, mutation generation, verification
/// and correctness checks run outside them.  Every cell's reduct is checked
/// for positive-region preservation after timing; ALL_INCR cells are
/// additionally checked against the from-scratch reduct set.
BenchReport run_benchmark(const BenchConfig& config);

enum class ReportFormat { csv, json, plot };

/// csv: header "dataset,fraction,algorithm,mean_s,std_s,reduct_size,pos_fraction"
/// plus one line per row.  json: array of row objects including raw timings.
/// plot: one "<path><ALGO>.dat" series file per algorithm with
/// "fraction mean_s" lines.
void emit_report(const BenchReport& report, ReportFormat format, const std::string& path);

} // namespace covreduct
