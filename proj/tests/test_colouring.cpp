#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include <anagraph/colouring.hpp>
#include <anagraph/errors.hpp>
#include <anagraph/graphs.hpp>
#include <anagraph/words.hpp>

using namespace anagraph;

namespace {

Colouring col(std::int32_t sigma, std::vector<Symbol> assignment) {
    return Colouring(Alphabet{sigma}, std::move(assignment));
}

std::size_t dnc_bound(int width, std::size_t bags) {
    std::size_t levels = static_cast<std::size_t>(std::floor(std::log2(bags))) + 1;
    return static_cast<std::size_t>(width + 1) * levels;
}

}  // namespace

TEST_CASE("colourings validate their symbols") {
    CHECK_THROWS_AS(col(2, {0, 2}), InvalidInput);
    Colouring phi = col(3, {2, 0, 1});
    CHECK(phi.size() == 3);
    CHECK(phi[0] == 2);
}

TEST_CASE("colour strings follow the visited vertices") {
    Colouring phi = col(3, {2, 0, 1, 0});
    std::vector<VertexId> path{3, 1, 0};
    ColorString s = colour_string_of(phi, path);
    CHECK(std::vector<Symbol>(s.entries().begin(), s.entries().end()) ==
          std::vector<Symbol>{0, 0, 2});
    CHECK(s.alphabet().size == 3);
}

TEST_CASE("verifier finds the first counterexample in enumeration order") {
    Graph p4 = build_path_graph(4);
    Verdict v = verify_anagram_free(p4, col(2, {0, 1, 0, 1}), 1000);
    CHECK(v.kind == Verdict::Kind::Counterexample);
    CHECK_FALSE(v.ok());
    CHECK(v.counterexample == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(v.paths_checked == 3);

    Graph edge(2, {{0, 1}});
    v = verify_anagram_free(edge, col(1, {0, 0}), 1000);
    CHECK(v.kind == Verdict::Kind::Counterexample);
    CHECK(v.counterexample == std::vector<VertexId>{0, 1});
}

TEST_CASE("verifier accepts rainbow colourings exhaustively") {
    Graph p4 = build_path_graph(4);
    Verdict v = verify_anagram_free(p4, col(4, {0, 1, 2, 3}), 1000);
    CHECK(v.kind == Verdict::Kind::Ok);
    CHECK(v.ok());
    CHECK(v.paths_checked == 6);
}

TEST_CASE("verifier reports unknown when the cap preempts a verdict") {
    Graph p4 = build_path_graph(4);
    Verdict v = verify_anagram_free(p4, col(2, {0, 1, 0, 1}), 2);
    CHECK(v.kind == Verdict::Kind::Unknown);
    CHECK_FALSE(v.ok());
    CHECK(v.paths_checked == 2);
}

TEST_CASE("verifier requires a total colouring") {
    Graph p4 = build_path_graph(4);
    CHECK_THROWS_AS(verify_anagram_free(p4, col(2, {0, 1}), 1000), InvalidInput);
}

TEST_CASE("abelian-square-free path colouring verifies at every sampled size") {
    for (std::uint32_t n : {1u, 2u, 7u, 30u}) {
        Colouring phi = colour_path_asf(n);
        CHECK(phi.size() == n);
        CHECK(phi.alphabet.size <= 4);
        CHECK(verify_anagram_free(build_path_graph(n), phi, 100'000).ok());
    }
    CHECK_THROWS_AS(colour_path_asf(64, 10), BudgetExceeded);
}

TEST_CASE("divide and conquer colouring verifies on the canonical instances") {
    auto [ladder8, lm] = build_ladder(8);
    Colouring phi = dnc_colour(ladder8, ladder_decomposition(8));
    CHECK(phi.alphabet.size == 10);
    CHECK(phi.alphabet.size <= static_cast<std::int32_t>(dnc_bound(3, 7)));
    CHECK(verify_anagram_free(ladder8, phi, 2'000'000).ok());

    Graph p16 = build_path_graph(16);
    PathDecomposition pd;
    for (VertexId i = 0; i + 1 < 16; ++i) pd.bags.push_back({i, i + 1});
    phi = dnc_colour(p16, pd);
    CHECK(phi.alphabet.size == 7);
    CHECK(phi.alphabet.size <= static_cast<std::int32_t>(dnc_bound(1, 15)));
    CHECK(verify_anagram_free(p16, phi, 1000).ok());

    auto [chain43, cm] = build_clique_chain(4, 3);
    phi = dnc_colour(chain43, clique_chain_decomposition(4, 3));
    CHECK(phi.alphabet.size == 9);
    CHECK(phi.alphabet.size <= static_cast<std::int32_t>(dnc_bound(5, 3)));
    CHECK(verify_anagram_free(chain43, phi, 4'000'000).ok());
}

TEST_CASE("divide and conquer stays within its palette bound across ladder sizes") {
    for (std::uint32_t n : {2u, 3u, 5u, 9u, 16u, 33u}) {
        auto [g, meta] = build_ladder(n);
        Colouring phi = dnc_colour(g, ladder_decomposition(n));
        CHECK(phi.size() == g.vertex_count());
        CHECK(phi.alphabet.size <= static_cast<std::int32_t>(dnc_bound(3, n - 1)));
    }
}

TEST_CASE("divide and conquer covers a single bag with one palette") {
    Graph p3 = build_path_graph(3);
    PathDecomposition d{{{0, 1, 2}}};
    Colouring phi = dnc_colour(p3, d);
    CHECK(phi.alphabet.size <= 3);
    CHECK(verify_anagram_free(p3, phi, 100).ok());
}

TEST_CASE("divide and conquer rejects invalid decompositions") {
    Graph p4 = build_path_graph(4);
    PathDecomposition bad{{{0, 1}, {2, 3}}};
    CHECK_THROWS_AS(dnc_colour(p4, bad), PreconditionViolation);
}
