#include <covreduct/ingest.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <covreduct/errors.hpp>
#include <covreduct/rng.hpp>

namespace covreduct {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

} // namespace

NumericTable load_csv(const std::string& path, const std::string& decision_column) {
    std::ifstream in(path);
    if (!in) raise(errc::io_error, "cannot open " + path);

    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++line_no;
        if (!trim(line).empty()) { header = split_csv_line(line); break; }
    }
    if (header.empty()) raise(errc::empty_file, path + " has no header row");
    if (header.size() < 2)
        raise(errc::parse_error, path + ": need at least one conditional and one decision column");

    std::size_t decision_idx = header.size() - 1;
    if (!decision_column.empty()) {
        const auto it = std::find(header.begin(), header.end(), decision_column);
        if (it == header.end())
            raise(errc::invalid_argument, "no column named '" + decision_column + "' in " + path);
        decision_idx = static_cast<std::size_t>(it - header.begin());
    }

    NumericTable t;
    for (std::size_t j = 0; j < header.size(); ++j)
        if (j != decision_idx) t.attribute_names.push_back(header[j]);
    t.columns.assign(t.attribute_names.size(), {});

    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != header.size())
            raise(errc::parse_error, path + " line " + std::to_string(line_no) + ": expected " +
                                         std::to_string(header.size()) + " cells, got " +
                                         std::to_string(cells.size()));
        std::size_t col = 0;
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (cells[j].empty())
                raise(errc::parse_error,
                      path + " line " + std::to_string(line_no) + ": missing value");
            if (j == decision_idx) {
                t.labels.push_back(cells[j]);
                continue;
            }
            double v = 0;
            const char* first = cells[j].data();
            const char* last = first + cells[j].size();
            const auto res = std::from_chars(first, last, v);
            if (res.ec != std::errc{} || res.ptr != last)
                raise(errc::non_numeric_conditional,
                      "column '" + header[j] + "' line " + std::to_string(line_no) + ": '" +
                          cells[j] + "' is not numeric");
            t.columns[col++].push_back(v);
        }
    }
    if (t.labels.empty()) raise(errc::empty_file, path + " has no data rows");
    return t;
}

NumericTable normalize(NumericTable table) {
    for (auto& col : table.columns) {
        const auto [mn_it, mx_it] = std::minmax_element(col.begin(), col.end());
        const double mn = *mn_it, range = *mx_it - *mn_it;
        for (auto& v : col) v = (range > 0) ? (v - mn) / range : 0.0;
    }
    return table;
}

Covering neighborhood_covering(const NumericTable& table, std::size_t attribute,
                               double epsilon) {
    if (attribute >= table.attributes())
        raise(errc::invalid_argument, "attribute index out of range");
    if (!(epsilon > 0)) raise(errc::invalid_argument, "epsilon must be positive");
    const auto& col = table.columns[attribute];
    const std::size_t n = col.size();

    // sort once; every neighborhood is then a contiguous window of the sorted
    // order, and the windows move monotonically, so duplicates are adjacent
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return col[a] < col[b]; });

    std::vector<ObjectSet> blocks;
    std::size_t lo = 0, hi = 0, prev_lo = n + 1, prev_hi = n + 1;
    for (std::size_t p = 0; p < n; ++p) {
        const double v = col[order[p]];
        while (v - col[order[lo]] > epsilon) ++lo;
        while (hi < n && col[order[hi]] - v <= epsilon) ++hi;
        if (lo != prev_lo || hi != prev_hi) {
            ObjectSet block(n);
            for (std::size_t q = lo; q < hi; ++q) block.set(order[q]);
            blocks.push_back(std::move(block));
            prev_lo = lo;
            prev_hi = hi;
        }
    }
    return Covering(n, std::move(blocks));
}

CoveringDecisionSystem build_cdis(const NumericTable& table, double epsilon, bool joint) {
    const std::size_t n = table.rows();
    if (n == 0) raise(errc::empty_file, "table has no rows");
    if (table.attributes() == 0) raise(errc::invalid_argument, "table has no attributes");

    std::vector<Covering> coverings;
    if (joint) {
        if (!(epsilon > 0)) raise(errc::invalid_argument, "epsilon must be positive");
        std::vector<ObjectSet> blocks;
        for (std::size_t x = 0; x < n; ++x) {
            ObjectSet nb(n);
            for (std::size_t y = 0; y < n; ++y) {
                double d2 = 0;
                for (const auto& col : table.columns) {
                    const double d = col[x] - col[y];
                    d2 += d * d;
                }
                if (d2 <= epsilon * epsilon) nb.set(y);
            }
            blocks.push_back(std::move(nb));
        }
        coverings.emplace_back(n, std::move(blocks));
    } else {
        for (std::size_t j = 0; j < table.attributes(); ++j)
            coverings.push_back(neighborhood_covering(table, j, epsilon));
    }

    // decision classes grouped by label, first-appearance order
    std::unordered_map<std::string, std::size_t> class_of;
    std::vector<ObjectSet> classes;
    for (std::size_t x = 0; x < n; ++x) {
        const auto [it, fresh] = class_of.try_emplace(table.labels[x], classes.size());
        if (fresh) classes.emplace_back(n);
        classes[it->second].set(x);
    }
    return CoveringDecisionSystem(n, std::move(coverings),
                                  DecisionPartition(n, std::move(classes)));
}

namespace {

std::size_t ceil_fraction(double intensity, std::size_t count) {
    return static_cast<std::size_t>(std::ceil(intensity * static_cast<double>(count)));
}

void check_intensity(double intensity) {
    if (!(intensity > 0) || intensity > 1)
        raise(errc::invalid_argument, "intensity must lie in (0, 1]");
}

} // namespace

MutationOutcome random_refine(const Covering& covering, std::uint64_t seed, double intensity) {
    check_intensity(intensity);
    std::vector<std::size_t> eligible;
    for (std::size_t b = 0; b < covering.size(); ++b)
        if (covering.block(b).count() >= 2) eligible.push_back(b);
    if (eligible.empty()) return {covering, false}; // nothing to split

    Rng rng(seed);
    rng.shuffle(eligible);
    const std::size_t take = std::min(ceil_fraction(intensity, covering.size()), eligible.size());
    std::vector<char> selected(covering.size(), 0);
    for (std::size_t i = 0; i < take; ++i) selected[eligible[i]] = 1;

    const std::size_t n = covering.universe_size();
    std::vector<ObjectSet> blocks;
    for (std::size_t b = 0; b < covering.size(); ++b) {
        if (!selected[b]) {
            blocks.push_back(covering.block(b));
            continue;
        }
        auto members = covering.block(b).to_indices();
        rng.shuffle(members);
        const std::size_t cut = 1 + rng.below(members.size() - 1);
        ObjectSet left(n), right(n);
        for (std::size_t i = 0; i < members.size(); ++i)
            (i < cut ? left : right).set(members[i]);
        blocks.push_back(std::move(left));
        blocks.push_back(std::move(right));
    }
    return {Covering(n, std::move(blocks)), true};
}

MutationOutcome random_coarsen(const Covering& covering, std::uint64_t seed, double intensity) {
    check_intensity(intensity);
    if (covering.size() < 2) return {covering, false}; // single block

    Rng rng(seed);
    std::vector<std::size_t> order(covering.size());
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    const std::size_t pairs =
        std::min(ceil_fraction(intensity * 0.5, covering.size()), covering.size() / 2);

    // partner[a] = b (and partner[b] = a) for each merged pair
    std::vector<std::size_t> partner(covering.size(), covering.size());
    for (std::size_t p = 0; p < pairs; ++p) {
        partner[order[2 * p]] = order[2 * p + 1];
        partner[order[2 * p + 1]] = order[2 * p];
    }

    const std::size_t n = covering.universe_size();
    std::vector<ObjectSet> blocks;
    for (std::size_t b = 0; b < covering.size(); ++b) {
        if (partner[b] == covering.size()) {
            blocks.push_back(covering.block(b));
        } else if (partner[b] > b) { // emit the union at the first member
            blocks.push_back(covering.block(b) | covering.block(partner[b]));
        }
    }
    return {Covering(n, std::move(blocks)), true};
}

} // namespace covreduct
