#include <covreduct/json_io.hpp>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include <covreduct/errors.hpp>

namespace covreduct {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) raise(errc::parse_error, "malformed JSON");
    return j;
}

std::vector<std::vector<std::size_t>> id_lists(const json& j, const char* what) {
    if (!j.is_array()) raise(errc::parse_error, std::string(what) + " must be an array");
    std::vector<std::vector<std::size_t>> out;
    for (const auto& lst : j) {
        if (!lst.is_array()) raise(errc::parse_error, std::string(what) + " entries must be arrays");
        std::vector<std::size_t> ids;
        for (const auto& v : lst) {
            if (!v.is_number_unsigned())
                raise(errc::parse_error, std::string(what) + " ids must be non-negative integers");
            ids.push_back(v.get<std::size_t>());
        }
        out.push_back(std::move(ids));
    }
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::io_error, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) raise(errc::io_error, "cannot write " + path);
    out << text;
}

json sets_to_json(const std::vector<ObjectSet>& sets) {
    json arr = json::array();
    for (const auto& s : sets) arr.push_back(s.to_indices());
    return arr;
}

} // namespace

CoveringDecisionSystem system_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("coverings") || !j.contains("decision"))
        raise(errc::parse_error, "system needs fields n, coverings, decision");
    if (!j["n"].is_number_unsigned()) raise(errc::parse_error, "n must be a non-negative integer");
    const auto n = j["n"].get<std::size_t>();
    if (!j["coverings"].is_array()) raise(errc::parse_error, "coverings must be an array");
    std::vector<std::vector<std::vector<std::size_t>>> coverings;
    for (const auto& cov : j["coverings"]) coverings.push_back(id_lists(cov, "covering"));
    return build_system(n, coverings, id_lists(j["decision"], "decision"));
}

std::string system_to_json(const CoveringDecisionSystem& s) {
    json j;
    j["n"] = s.universe_size();
    json covs = json::array();
    for (const auto& c : s.coverings()) covs.push_back(sets_to_json(c.blocks()));
    j["coverings"] = std::move(covs);
    j["decision"] = sets_to_json(s.decision().classes());
    return j.dump(2) + "\n";
}

CoveringDecisionSystem load_system(const std::string& path) {
    return system_from_json(slurp(path));
}

void save_system(const CoveringDecisionSystem& s, const std::string& path) {
    spill(path, system_to_json(s));
}

CoveringMutation mutation_from_json(const std::string& text, std::size_t universe) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("target") || !j.contains("kind") || !j.contains("blocks"))
        raise(errc::parse_error, "mutation needs fields target, kind, blocks");
    if (!j["target"].is_number_unsigned())
        raise(errc::parse_error, "target must be a non-negative integer");
    const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
    if (kind != "refine" && kind != "coarsen")
        raise(errc::parse_error, "kind must be \"refine\" or \"coarsen\"");

    std::vector<ObjectSet> blocks;
    for (const auto& ids : id_lists(j["blocks"], "blocks")) {
        ObjectSet b(universe);
        for (std::size_t id : ids) {
            if (id >= universe)
                raise(errc::universe_mismatch, "mutation block id out of range");
            b.set(id);
        }
        blocks.push_back(std::move(b));
    }
    return CoveringMutation{j["target"].get<std::size_t>(),
                            kind == "refine" ? MutationKind::refine : MutationKind::coarsen,
                            Covering(universe, std::move(blocks))};
}

std::string mutation_to_json(const CoveringMutation& m) {
    json j;
    j["target"] = m.target;
    j["kind"] = (m.kind == MutationKind::refine) ? "refine" : "coarsen";
    j["blocks"] = sets_to_json(m.covering.blocks());
    return j.dump(2) + "\n";
}

CoveringMutation load_mutation(const std::string& path, std::size_t universe) {
    return mutation_from_json(slurp(path), universe);
}

void save_mutation(const CoveringMutation& m, const std::string& path) {
    spill(path, mutation_to_json(m));
}

} // namespace covreduct
