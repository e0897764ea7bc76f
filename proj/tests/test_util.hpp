#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <covreduct/index_set.hpp>

namespace testutil {

/// Reduct / antichain contents as plain index vectors (doctest prints these
/// readably on failure, unlike raw bit masks).
inline std::vector<std::vector<std::size_t>>
indices(const std::vector<covreduct::CoveringIndexSet>& sets) {
    std::vector<std::vector<std::size_t>> out;
    out.reserve(sets.size());
    for (auto s : sets) out.push_back(s.to_indices());
    return out;
}

/// Self-cleaning scratch directory for file-facing tests.
struct TempDir {
    std::filesystem::path path;

    TempDir() {
        std::random_device rd;
        path = std::filesystem::temp_directory_path() /
               ("covreduct-test-" + std::to_string(rd()) + "-" + std::to_string(rd()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string file(const std::string& name) const { return (path / name).string(); }
};

inline std::string write_file(const TempDir& dir, const std::string& name,
                              const std::string& content) {
    const std::string p = dir.file(name);
    std::ofstream out(p);
    out << content;
    return p;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace testutil
