// covreduct: attribute reduction for covering decision systems.
//   reduce   one-shot reduct computation (greedy or exhaustive)
//   dynamic  single-covering mutation with incremental maintenance
//   bench    incremental-vs-scratch timing sweeps
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <covreduct/approximation.hpp>
#include <covreduct/bench.hpp>
#include <covreduct/covering_system.hpp>
#include <covreduct/dynamic_update.hpp>
#include <covreduct/errors.hpp>
#include <covreduct/ingest.hpp>
#include <covreduct/json_io.hpp>
#include <covreduct/reduct.hpp>
#include <covreduct/related_family.hpp>

namespace {

using nlohmann::json;
using namespace covreduct;

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// .json files carry a serialized system; everything else is a CSV dataset.
CoveringDecisionSystem load_input(const std::string& path, double epsilon,
                                  const std::string& decision, bool joint) {
    if (ends_with(path, ".json")) return load_system(path);
    return build_cdis(normalize(load_csv(path, decision)), epsilon, joint);
}

json indices_json(const CoveringIndexSet& p) { return json(p.to_indices()); }

json reduct_set_json(const ReductSet& rs) {
    json arr = json::array();
    for (const auto& p : rs) arr.push_back(indices_json(p));
    return arr;
}

void write_output(const json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) raise(errc::io_error, "cannot write " + out_path);
    out << doc.dump(2) << '\n';
}

/// "10:100:10" (start:end:step) or "10,20,30".
std::vector<int> parse_fractions(const std::string& text) {
    std::vector<int> out;
    if (text.find(':') != std::string::npos) {
        int start = 0, end = 0, step = 0;
        if (std::sscanf(text.c_str(), "%d:%d:%d", &start, &end, &step) != 3 || step <= 0)
            raise(errc::invalid_argument, "fractions range must be start:end:step");
        for (int f = start; f <= end; f += step) out.push_back(f);
    } else {
        std::size_t pos = 0;
        while (pos < text.size()) {
            const std::size_t comma = text.find(',', pos);
            const std::string tok = text.substr(pos, comma - pos);
            try {
                out.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                raise(errc::invalid_argument, "bad fraction '" + tok + "'");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    if (out.empty()) raise(errc::invalid_argument, "empty fractions list");
    return out;
}

BenchAlgo parse_algo(const std::string& name) {
    if (name == "nihv") return BenchAlgo::nihv;
    if (name == "ihvr") return BenchAlgo::ihvr;
    if (name == "ihvc") return BenchAlgo::ihvc;
    if (name == "all-exact") return BenchAlgo::all_exact;
    if (name == "all-incr") return BenchAlgo::all_incr;
    raise(errc::invalid_argument, "unknown algorithm '" + name + "'");
}

struct ReduceArgs {
    std::string input;
    double epsilon = 0.05;
    std::string algo = "nihv";
    bool joint = false;
    std::string decision;
    std::string out;
};

int run_reduce(const ReduceArgs& a) {
    const CoveringDecisionSystem s = load_input(a.input, a.epsilon, a.decision, a.joint);
    const RelatedFamily fam = related_family(s);

    json doc;
    doc["input"] = a.input;
    doc["n"] = s.universe_size();
    doc["coverings"] = s.covering_count();
    doc["classes"] = s.decision().size();
    doc["pos_size"] = fam.pos().count();
    doc["consistent"] = fam.pos().count() == s.universe_size();

    if (a.algo == "nihv") {
        const GreedyReduct g = heuristic_reduct(minimal_related_sets(fam));
        doc["algorithm"] = "NIHV";
        doc["reduct"] = indices_json(g.reduct);
        if (g.vacuous) {
            doc["warnings"] = json::array({"positive region is empty; the empty set is the "
                                           "only reduct"});
            std::cerr << "warning: positive region is empty\n";
        }
    } else if (a.algo == "all") {
        doc["algorithm"] = "ALL";
        doc["reducts"] = reduct_set_json(all_reducts(fam));
    } else {
        raise(errc::invalid_argument, "--algo must be nihv or all");
    }
    write_output(doc, a.out);
    return 0;
}

struct DynamicArgs {
    std::string input;
    std::string mode;
    std::uint64_t seed = 1;
    double intensity = 0.3;
    std::string algo; // ihvr | ihvc | all-incr; default = mode's heuristic
    std::string mutation_file;
    std::optional<std::size_t> target;
    double epsilon = 0.05;
    bool joint = false;
    std::string decision;
    std::string out;
};

int run_dynamic(const DynamicArgs& a) {
    if (a.mode != "refine" && a.mode != "coarsen")
        raise(errc::invalid_argument, "--mode must be refine or coarsen");
    const MutationKind kind =
        a.mode == "refine" ? MutationKind::refine : MutationKind::coarsen;
    std::string algo = a.algo;
    if (algo.empty()) algo = kind == MutationKind::refine ? "ihvr" : "ihvc";
    if (algo == "ihvr" && kind != MutationKind::refine)
        raise(errc::invalid_argument, "ihvr requires --mode refine");
    if (algo == "ihvc" && kind != MutationKind::coarsen)
        raise(errc::invalid_argument, "ihvc requires --mode coarsen");
    if (algo != "ihvr" && algo != "ihvc" && algo != "all-incr")
        raise(errc::invalid_argument, "--algo must be ihvr, ihvc or all-incr");

    const CoveringDecisionSystem s = load_input(a.input, a.epsilon, a.decision, a.joint);
    json warnings = json::array();

    CoveringMutation mut{0, kind, Covering(s.universe_size(), {ObjectSet::full(s.universe_size())})};
    if (!a.mutation_file.empty()) {
        mut = load_mutation(a.mutation_file, s.universe_size());
        if (mut.kind != kind)
            raise(errc::invalid_argument, "mutation file kind disagrees with --mode");
    } else {
        const std::size_t target = a.target.value_or(s.covering_count() - 1);
        if (target >= s.covering_count())
            raise(errc::invalid_argument, "--target out of range");
        const MutationOutcome gen =
            kind == MutationKind::refine
                ? random_refine(s.covering(target), a.seed, a.intensity)
                : random_coarsen(s.covering(target), a.seed, a.intensity);
        if (!gen.changed) {
            warnings.push_back("mutation left the covering unchanged");
            std::cerr << "warning: mutation left the covering unchanged\n";
        }
        mut = CoveringMutation{target, kind, gen.covering};
    }

    const bool ok = kind == MutationKind::refine
                        ? verify_refinement(s.covering(mut.target), mut.covering)
                        : verify_coarsening(s.covering(mut.target), mut.covering);
    if (!ok)
        raise(kind == MutationKind::refine ? errc::not_a_refinement : errc::not_a_coarsening,
              "mutation fails verification against the input system");

    const IncrementalState state = make_incremental_state(s, algo == "all-incr");
    const UpdatedFamily upd = kind == MutationKind::refine
                                  ? update_related_refine(state, mut.covering, mut.target)
                                  : update_related_coarsen(state, mut.covering, mut.target);

    json doc;
    doc["input"] = a.input;
    doc["mode"] = a.mode;
    doc["target"] = mut.target;
    doc["generation"] = state.generation + 1;
    doc["pos_size"] = upd.family.pos().count();
    doc["pos_changed"] = !(upd.family.pos() == state.family.pos());
    doc["mutated_blocks"] = mut.covering.size();

    if (algo == "all-incr") {
        const IncrementalReducts inc = kind == MutationKind::refine
                                           ? incremental_all_reducts_refine(state, upd)
                                           : incremental_all_reducts_coarsen(state, upd);
        doc["algorithm"] = "ALL_INCR";
        doc["reducts"] = reduct_set_json(inc.reducts);
        doc["retained"] = reduct_set_json(inc.retained);
        doc["generated"] = reduct_set_json(inc.generated);
    } else {
        const GreedyReduct g = algo == "ihvr" ? ihvr(state, upd) : ihvc(state, upd);
        doc["algorithm"] = algo == "ihvr" ? "IHVR" : "IHVC";
        doc["reduct"] = indices_json(g.reduct);
        if (g.vacuous) {
            warnings.push_back("positive region is empty after the mutation");
            std::cerr << "warning: positive region is empty after the mutation\n";
        }
    }
    if (!warnings.empty()) doc["warnings"] = warnings;
    write_output(doc, a.out);
    return 0;
}

struct BenchArgs {
    std::string input;
    std::string mode = "refine";
    std::string fractions = "10:100:10";
    std::size_t repeats = 10;
    std::uint64_t seed = 1;
    double intensity = 0.3;
    double epsilon = 0.05;
    std::string decision;
    bool joint = false;
    std::string out = "report.csv";
    std::string format = "csv";
    std::vector<std::string> algos;
    std::optional<std::uint64_t> shuffle;
    double timeout_s = 600.0;
};

int run_bench(const BenchArgs& a) {
    if (a.mode != "refine" && a.mode != "coarsen")
        raise(errc::invalid_argument, "--mode must be refine or coarsen");
    ReportFormat format;
    if (a.format == "csv")
        format = ReportFormat::csv;
    else if (a.format == "json")
        format = ReportFormat::json;
    else if (a.format == "plot")
        format = ReportFormat::plot;
    else
        raise(errc::invalid_argument, "--format must be csv, json or plot");

    BenchConfig cfg;
    cfg.dataset = a.input;
    cfg.epsilon = a.epsilon;
    cfg.fractions = parse_fractions(a.fractions);
    cfg.repeats = a.repeats;
    cfg.mode = a.mode == "refine" ? MutationKind::refine : MutationKind::coarsen;
    cfg.seed = a.seed;
    cfg.intensity = a.intensity;
    cfg.shuffle_seed = a.shuffle;
    cfg.cell_timeout_s = a.timeout_s;
    cfg.decision_column = a.decision;
    cfg.joint = a.joint;
    for (const auto& name : a.algos) cfg.algorithms.push_back(parse_algo(name));

    const BenchReport report = run_benchmark(cfg);
    emit_report(report, format, a.out);
    std::cout << "wrote " << a.out << (format == ReportFormat::plot ? "<ALGO>.dat" : "")
              << " (" << report.rows.size() << " rows)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"attribute reduction for covering decision systems"};
    app.require_subcommand(1);

    ReduceArgs r;
    auto* reduce = app.add_subcommand("reduce", "compute a reduct (greedy or exhaustive)");
    reduce->add_option("--input", r.input, "system .json or CSV dataset")->required();
    reduce->add_option("--epsilon", r.epsilon, "neighborhood radius for CSV input");
    reduce->add_option("--algo", r.algo, "nihv | all");
    reduce->add_flag("--joint", r.joint, "one joint Euclidean covering instead of per-attribute");
    reduce->add_option("--decision", r.decision, "decision column name (default: last)");
    reduce->add_option("--out", r.out, "write the JSON result here instead of stdout");

    DynamicArgs d;
    auto* dyn = app.add_subcommand("dynamic", "mutate one covering and update incrementally");
    dyn->add_option("--input", d.input, "system .json or CSV dataset")->required();
    dyn->add_option("--mode", d.mode, "refine | coarsen")->required();
    dyn->add_option("--seed", d.seed, "mutation generator seed");
    dyn->add_option("--intensity", d.intensity, "fraction of blocks to mutate");
    dyn->add_option("--algo", d.algo, "ihvr | ihvc | all-incr (default: mode's heuristic)");
    dyn->add_option("--mutation", d.mutation_file, "apply this mutation .json instead of generating");
    std::size_t target_arg = 0;
    auto* target_opt = dyn->add_option("--target", target_arg, "covering to mutate (default: last)");
    dyn->add_option("--epsilon", d.epsilon, "neighborhood radius for CSV input");
    dyn->add_flag("--joint", d.joint, "one joint Euclidean covering instead of per-attribute");
    dyn->add_option("--decision", d.decision, "decision column name (default: last)");
    dyn->add_option("--out", d.out, "write the JSON result here instead of stdout");

    BenchArgs b;
    auto* bench = app.add_subcommand("bench", "incremental-vs-scratch timing sweep");
    bench->add_option("--input", b.input, "system .json or CSV dataset")->required();
    bench->add_option("--mode", b.mode, "refine | coarsen");
    bench->add_option("--fractions", b.fractions, "start:end:step or comma list of percentages");
    bench->add_option("--repeats", b.repeats, "timed repetitions per cell");
    bench->add_option("--seed", b.seed, "mutation generator seed");
    bench->add_option("--intensity", b.intensity, "fraction of blocks to mutate");
    bench->add_option("--epsilon", b.epsilon, "neighborhood radius for CSV input");
    bench->add_option("--decision", b.decision, "decision column name (default: last)");
    bench->add_flag("--joint", b.joint, "one joint Euclidean covering instead of per-attribute");
    bench->add_option("--out", b.out, "report path (plot format: prefix for <ALGO>.dat)");
    bench->add_option("--format", b.format, "csv | json | plot");
    bench->add_option("--algos", b.algos,
                      "subset of nihv,ihvr,ihvc,all-exact,all-incr (default: nihv + mode's "
                      "incremental)")
        ->delimiter(',');
    std::uint64_t shuffle_arg = 0;
    auto* shuffle_opt = bench->add_option("--shuffle", shuffle_arg, "shuffle object order with this seed");
    bench->add_option("--timeout", b.timeout_s, "per-cell wall-clock budget in seconds");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*reduce) return run_reduce(r);
        if (*dyn) {
            if (*target_opt) d.target = target_arg;
            return run_dynamic(d);
        }
        if (*shuffle_opt) b.shuffle = shuffle_arg;
        return run_bench(b);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == errc::io_error ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
