#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "anagraph/adversary.hpp"
#include "anagraph/colouring.hpp"
#include "anagraph/graphs.hpp"

namespace anagraph {

// JSON wire formats. All readers throw InvalidInput on malformed
// documents; they never partially construct a value.
//
//   graph          {"vertex_count": int, "edges": [[u,v],...],
//                   "meta": {"family": "ladder"|"clique_chain"|"path"|"custom", "n"?, "k"?}}
//   colouring      {"alphabet_size": int, "colours": [int,...]}
//   decomposition  {"bags": [[v,...],...]}
//   anagram path   {"path": [v,...], "colours": [c,...], "interval"?: [i,j],
//                   "split": [bit,...], "source": string}

struct GraphMeta {
    std::string family = "custom";
    std::optional<std::uint32_t> n;
    std::optional<std::uint32_t> k;
};

struct GraphFile {
    Graph graph;
    GraphMeta meta;
};

nlohmann::json graph_to_json(const Graph& g, const GraphMeta& meta);
GraphFile graph_from_json(const nlohmann::json& j);

nlohmann::json colouring_to_json(const Colouring& phi);
Colouring colouring_from_json(const nlohmann::json& j);

nlohmann::json decomposition_to_json(const PathDecomposition& d);
PathDecomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json anagram_path_to_json(const AnagramPath& p);
AnagramPath anagram_path_from_json(const nlohmann::json& j);

/// Parses a whole document, mapping json parse errors to InvalidInput.
nlohmann::json parse_json_text(const std::string& text);

}  // namespace anagraph
