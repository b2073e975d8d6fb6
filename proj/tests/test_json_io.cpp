#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <anagraph/adversary.hpp>
#include <anagraph/colouring.hpp>
#include <anagraph/errors.hpp>
#include <anagraph/graphs.hpp>
#include <anagraph/json_io.hpp>

using namespace anagraph;
using nlohmann::json;

TEST_CASE("json parsing maps syntax errors to invalid input") {
    CHECK_THROWS_AS(parse_json_text("{"), InvalidInput);
    CHECK_THROWS_AS(parse_json_text(""), InvalidInput);
    CHECK(parse_json_text("{\"a\": 1}")["a"] == 1);
}

TEST_CASE("graph round trip preserves structure and meta") {
    auto [g, meta] = build_ladder(4);
    json j = graph_to_json(g, {"ladder", 4u, std::nullopt});
    CHECK(j["vertex_count"] == 8);
    CHECK(j["meta"]["family"] == "ladder");
    CHECK(j["meta"]["n"] == 4);
    CHECK_FALSE(j["meta"].contains("k"));

    GraphFile back = graph_from_json(j);
    CHECK(back.graph.vertex_count() == g.vertex_count());
    CHECK(std::vector<std::pair<VertexId, VertexId>>(back.graph.edges().begin(),
                                                     back.graph.edges().end()) ==
          std::vector<std::pair<VertexId, VertexId>>(g.edges().begin(), g.edges().end()));
    CHECK(back.meta.family == "ladder");
    CHECK(back.meta.n == 4u);
    CHECK_FALSE(back.meta.k.has_value());
}

TEST_CASE("graphs without meta read as custom") {
    GraphFile back = graph_from_json(parse_json_text(
        R"({"vertex_count": 3, "edges": [[0, 1], [1, 2]]})"));
    CHECK(back.meta.family == "custom");
    CHECK_FALSE(back.meta.n.has_value());
    CHECK(back.graph.edge_count() == 2);
}

TEST_CASE("graph reader rejects malformed documents") {
    CHECK_THROWS_AS(graph_from_json(parse_json_text(R"({"edges": []})")), InvalidInput);
    CHECK_THROWS_AS(graph_from_json(parse_json_text(R"({"vertex_count": 2})")), InvalidInput);
    CHECK_THROWS_AS(graph_from_json(parse_json_text(R"({"vertex_count": -1, "edges": []})")),
                    InvalidInput);
    CHECK_THROWS_AS(
        graph_from_json(parse_json_text(R"({"vertex_count": 2, "edges": [[0]]})")),
        InvalidInput);
    CHECK_THROWS_AS(
        graph_from_json(parse_json_text(R"({"vertex_count": 2, "edges": [[0, 5]]})")),
        InvalidInput);
    CHECK_THROWS_AS(
        graph_from_json(parse_json_text(R"({"vertex_count": 2, "edges": [[0, 0.5]]})")),
        InvalidInput);
    CHECK_THROWS_AS(graph_from_json(parse_json_text(
                        R"({"vertex_count": 2, "edges": [], "meta": {"family": "tree"}})")),
                    InvalidInput);
    CHECK_THROWS_AS(graph_from_json(parse_json_text(
                        R"({"vertex_count": 2, "edges": [], "meta": {}})")),
                    InvalidInput);
    CHECK_THROWS_AS(graph_from_json(parse_json_text("[1, 2]")), InvalidInput);
}

TEST_CASE("colouring round trip and validation") {
    Colouring phi(Alphabet{3}, {0, 2, 1, 1});
    json j = colouring_to_json(phi);
    CHECK(j["alphabet_size"] == 3);
    Colouring back = colouring_from_json(j);
    CHECK(back.alphabet.size == 3);
    CHECK(back.assignment == phi.assignment);

    CHECK_THROWS_AS(colouring_from_json(parse_json_text(R"({"colours": [0]})")), InvalidInput);
    CHECK_THROWS_AS(colouring_from_json(parse_json_text(R"({"alphabet_size": 2})")),
                    InvalidInput);
    // Symbol outside the declared alphabet.
    CHECK_THROWS_AS(
        colouring_from_json(parse_json_text(R"({"alphabet_size": 2, "colours": [0, 7]})")),
        InvalidInput);
    CHECK_THROWS_AS(
        colouring_from_json(parse_json_text(R"({"alphabet_size": 2, "colours": "ab"})")),
        InvalidInput);
}

TEST_CASE("decomposition round trip and validation") {
    PathDecomposition d{{{0, 1, 2, 3}, {2, 3, 4, 5}}};
    PathDecomposition back = decomposition_from_json(decomposition_to_json(d));
    CHECK(back.bags == d.bags);
    CHECK(back.width() == 3);

    CHECK_THROWS_AS(decomposition_from_json(parse_json_text("{}")), InvalidInput);
    CHECK_THROWS_AS(decomposition_from_json(parse_json_text(R"({"bags": [[0], 1]})")),
                    InvalidInput);
    CHECK_THROWS_AS(decomposition_from_json(parse_json_text(R"({"bags": [[-1]]})")),
                    InvalidInput);
}

TEST_CASE("anagram path round trip with and without interval") {
    AnagramPath p{{0, 1, 3, 2}, {0, 1, 1, 0}, SplitVector{{0, 1}},
                  std::pair<std::size_t, std::size_t>{0, 1}, "even-substring"};
    json j = anagram_path_to_json(p);
    CHECK(j["interval"] == json::array({0, 1}));
    AnagramPath back = anagram_path_from_json(j);
    CHECK(back.vertices == p.vertices);
    CHECK(back.colours == p.colours);
    CHECK(back.split.bits == p.split.bits);
    CHECK(back.interval == p.interval);
    CHECK(back.source == "even-substring");

    AnagramPath bare{{0, 3}, {2, 2}, SplitVector{{0}}, std::nullopt, "monochromatic-edge"};
    j = anagram_path_to_json(bare);
    CHECK_FALSE(j.contains("interval"));
    back = anagram_path_from_json(j);
    CHECK_FALSE(back.interval.has_value());
    CHECK(back.source == "monochromatic-edge");
}

TEST_CASE("anagram path reader rejects malformed documents") {
    CHECK_THROWS_AS(anagram_path_from_json(parse_json_text(R"({"colours": [], "split": []})")),
                    InvalidInput);
    CHECK_THROWS_AS(
        anagram_path_from_json(parse_json_text(
            R"({"path": [0, 1], "colours": [0, 0], "split": [2]})")),
        InvalidInput);
    CHECK_THROWS_AS(
        anagram_path_from_json(parse_json_text(
            R"({"path": [0, 1], "colours": [0, 0], "split": [0], "interval": [1]})")),
        InvalidInput);
    CHECK_THROWS_AS(
        anagram_path_from_json(parse_json_text(
            R"({"path": [0, 1], "colours": [0, 0], "split": [0], "source": 3})")),
        InvalidInput);
}
