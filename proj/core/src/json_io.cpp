#include "anagraph/json_io.hpp"

#include <utility>
#include <vector>

#include "anagraph/errors.hpp"

namespace anagraph {

namespace {

const nlohmann::json& require(const nlohmann::json& j, const char* key) {
    if (!j.is_object()) throw InvalidInput("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw InvalidInput(std::string("missing key \"") + key + "\"");
    return *it;
}

std::int64_t as_integer(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

std::uint32_t as_u32(const nlohmann::json& j, const char* what) {
    std::int64_t v = as_integer(j, what);
    if (v < 0 || v > static_cast<std::int64_t>(UINT32_MAX))
        throw InvalidInput(std::string(what) + " out of range");
    return static_cast<std::uint32_t>(v);
}

std::vector<VertexId> as_vertex_list(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
    std::vector<VertexId> out;
    out.reserve(j.size());
    for (const auto& entry : j) out.push_back(as_u32(entry, what));
    return out;
}

}  // namespace

nlohmann::json parse_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InvalidInput("not valid JSON");
    return j;
}

nlohmann::json graph_to_json(const Graph& g, const GraphMeta& meta) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    nlohmann::json m{{"family", meta.family}};
    if (meta.n) m["n"] = *meta.n;
    if (meta.k) m["k"] = *meta.k;
    return {{"vertex_count", g.vertex_count()}, {"edges", std::move(edges)},
            {"meta", std::move(m)}};
}

GraphFile graph_from_json(const nlohmann::json& j) {
    std::uint32_t vertex_count = as_u32(require(j, "vertex_count"), "vertex_count");
    const auto& edges_json = require(j, "edges");
    if (!edges_json.is_array()) throw InvalidInput("edges must be an array");
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(edges_json.size());
    for (const auto& e : edges_json) {
        if (!e.is_array() || e.size() != 2)
            throw InvalidInput("each edge must be a pair of vertex ids");
        edges.emplace_back(as_u32(e[0], "edge endpoint"), as_u32(e[1], "edge endpoint"));
    }

    GraphFile out{Graph(vertex_count, std::move(edges)), {}};
    if (auto it = j.find("meta"); it != j.end()) {
        const auto& family = require(*it, "family");
        if (!family.is_string()) throw InvalidInput("meta.family must be a string");
        out.meta.family = family.get<std::string>();
        if (out.meta.family != "ladder" && out.meta.family != "clique_chain" &&
            out.meta.family != "path" && out.meta.family != "custom")
            throw InvalidInput("unknown graph family \"" + out.meta.family + "\"");
        if (auto n = it->find("n"); n != it->end()) out.meta.n = as_u32(*n, "meta.n");
        if (auto k = it->find("k"); k != it->end()) out.meta.k = as_u32(*k, "meta.k");
    }
    return out;
}

nlohmann::json colouring_to_json(const Colouring& phi) {
    return {{"alphabet_size", phi.alphabet.size}, {"colours", phi.assignment}};
}

Colouring colouring_from_json(const nlohmann::json& j) {
    std::int64_t alphabet_size = as_integer(require(j, "alphabet_size"), "alphabet_size");
    if (alphabet_size < 0 || alphabet_size > INT32_MAX)
        throw InvalidInput("alphabet_size out of range");
    const auto& colours_json = require(j, "colours");
    if (!colours_json.is_array()) throw InvalidInput("colours must be an array");
    std::vector<Symbol> colours;
    colours.reserve(colours_json.size());
    for (const auto& c : colours_json) {
        std::int64_t v = as_integer(c, "colour");
        if (v < INT32_MIN || v > INT32_MAX) throw InvalidInput("colour out of range");
        colours.push_back(static_cast<Symbol>(v));
    }
    return Colouring(Alphabet{static_cast<std::int32_t>(alphabet_size)}, std::move(colours));
}

nlohmann::json decomposition_to_json(const PathDecomposition& d) {
    nlohmann::json bags = nlohmann::json::array();
    for (const auto& bag : d.bags) bags.push_back(bag);
    return {{"bags", std::move(bags)}};
}

PathDecomposition decomposition_from_json(const nlohmann::json& j) {
    const auto& bags_json = require(j, "bags");
    if (!bags_json.is_array()) throw InvalidInput("bags must be an array");
    PathDecomposition d;
    d.bags.reserve(bags_json.size());
    for (const auto& bag : bags_json) d.bags.push_back(as_vertex_list(bag, "bag entry"));
    return d;
}

nlohmann::json anagram_path_to_json(const AnagramPath& p) {
    nlohmann::json out{{"path", p.vertices},
                       {"colours", p.colours},
                       {"split", nlohmann::json::array()},
                       {"source", p.source}};
    for (std::uint8_t bit : p.split.bits) out["split"].push_back(static_cast<int>(bit));
    if (p.interval) out["interval"] = {p.interval->first, p.interval->second};
    return out;
}

AnagramPath anagram_path_from_json(const nlohmann::json& j) {
    AnagramPath out;
    out.vertices = as_vertex_list(require(j, "path"), "path");
    const auto& colours_json = require(j, "colours");
    if (!colours_json.is_array()) throw InvalidInput("colours must be an array");
    for (const auto& c : colours_json) {
        std::int64_t v = as_integer(c, "colour");
        if (v < INT32_MIN || v > INT32_MAX) throw InvalidInput("colour out of range");
        out.colours.push_back(static_cast<Symbol>(v));
    }
    const auto& split_json = require(j, "split");
    if (!split_json.is_array()) throw InvalidInput("split must be an array");
    for (const auto& bit : split_json) {
        std::int64_t v = as_integer(bit, "split bit");
        if (v != 0 && v != 1) throw InvalidInput("split bits must be 0 or 1");
        out.split.bits.push_back(static_cast<std::uint8_t>(v));
    }
    if (auto it = j.find("interval"); it != j.end()) {
        if (!it->is_array() || it->size() != 2)
            throw InvalidInput("interval must be a pair of indices");
        out.interval = {as_u32((*it)[0], "interval index"), as_u32((*it)[1], "interval index")};
    }
    if (auto it = j.find("source"); it != j.end()) {
        if (!it->is_string()) throw InvalidInput("source must be a string");
        out.source = it->get<std::string>();
    }
    return out;
}

}  // namespace anagraph
