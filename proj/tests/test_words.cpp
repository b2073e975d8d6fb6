#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include <anagraph/errors.hpp>
#include <anagraph/words.hpp>

using namespace anagraph;

namespace {

ColorString cs(std::int32_t sigma, std::vector<Symbol> entries) {
    return ColorString(Alphabet{sigma}, std::move(entries));
}

std::map<Symbol, int> counts_of(std::vector<Symbol> v) {
    std::map<Symbol, int> m;
    for (Symbol c : v) ++m[c];
    return m;
}

// Reference scan: is there any pair-aligned even window at all?
bool brute_has_even_window(const ColorString& s) {
    const std::size_t pairs = s.size() / 2;
    for (std::size_t b = 0; b < pairs; ++b)
        for (std::size_t e = b + 1; e <= pairs; ++e) {
            std::vector<Symbol> window(s.entries().begin() + 2 * b, s.entries().begin() + 2 * e);
            if (is_even(cs(s.alphabet().size, std::move(window)))) return true;
        }
    return false;
}

void check_split_halves(const ColorString& s, const SplitVector& v) {
    REQUIRE(v.bits.size() == s.size() / 2);
    auto total = counts_of({s.entries().begin(), s.entries().end()});
    auto chosen = counts_of(apply_split(s, v));
    auto rest = counts_of(apply_split_complement(s, v));
    for (auto [sym, n] : total) {
        CHECK(chosen[sym] * 2 == n);
        CHECK(rest[sym] * 2 == n);
    }
}

}  // namespace

TEST_CASE("colour strings reject out-of-alphabet entries") {
    CHECK_THROWS_AS(cs(2, {0, 2}), InvalidInput);
    CHECK_THROWS_AS(cs(1, {-1}), InvalidInput);
    CHECK_NOTHROW(cs(3, {0, 1, 2}));
    CHECK(cs(3, {}).empty());
}

TEST_CASE("parity vectors track counts modulo two") {
    auto p = parity_vector(cs(3, {0, 1, 1, 2}));
    CHECK(p.bits == std::vector<std::uint8_t>{1, 0, 1});
    CHECK_FALSE(p.all_zero());
    auto q = parity_vector(cs(3, {0, 2}));
    CHECK((p ^ q).all_zero());

    CHECK(symbol_counts(cs(3, {0, 1, 1, 2})) == std::vector<std::size_t>{1, 2, 1});
    CHECK(is_even(cs(2, {0, 0, 1, 1})));
    CHECK_FALSE(is_even(cs(2, {0, 1, 1})));
    CHECK(is_even(cs(2, {})));
}

TEST_CASE("even substring witnesses on fixed strings") {
    auto w = find_even_substring(cs(1, {0, 0}));
    REQUIRE(w.has_value());
    CHECK(w->begin_pair == 0);
    CHECK(w->end_pair == 1);

    w = find_even_substring(cs(2, {0, 1, 0, 1}));
    REQUIRE(w.has_value());
    CHECK(w->begin_pair == 0);
    CHECK(w->end_pair == 2);

    CHECK_FALSE(find_even_substring(cs(2, {0, 1})).has_value());
    CHECK_FALSE(find_even_substring(cs(2, {})).has_value());
    CHECK_THROWS_AS(find_even_substring(cs(2, {0, 1, 0})), InvalidInput);
}

TEST_CASE("even substring witness is valid and end-minimal on all binary length-8 strings") {
    // 4 pairs give 5 prefix parity vectors over 4 possible values, so a
    // witness is guaranteed here by pigeonhole.
    for (std::uint32_t mask = 0; mask < (1u << 8); ++mask) {
        std::vector<Symbol> entries(8);
        for (std::size_t i = 0; i < 8; ++i) entries[i] = (mask >> i) & 1;
        ColorString s = cs(2, entries);
        auto w = find_even_substring(s);
        REQUIRE(w.has_value());
        REQUIRE(w->begin_pair < w->end_pair);
        REQUIRE(w->end_pair <= 4);
        std::vector<Symbol> window(entries.begin() + 2 * w->begin_pair,
                                   entries.begin() + 2 * w->end_pair);
        CHECK(is_even(cs(2, window)));
        // No witness may end strictly earlier.
        for (std::size_t e = 1; e < w->end_pair; ++e)
            for (std::size_t b = 0; b < e; ++b) {
                std::vector<Symbol> earlier(entries.begin() + 2 * b, entries.begin() + 2 * e);
                CHECK_FALSE(is_even(cs(2, earlier)));
            }
    }
}

TEST_CASE("even substring agrees with the brute window scan on short ternary strings") {
    for (std::size_t len : {2u, 4u, 6u}) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < len; ++i) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t c = code;
            std::vector<Symbol> entries(len);
            for (auto& e : entries) {
                e = static_cast<Symbol>(c % 3);
                c /= 3;
            }
            ColorString s = cs(3, entries);
            CHECK(find_even_substring(s).has_value() == brute_has_even_window(s));
        }
    }
}

TEST_CASE("pair splitting on fixed strings") {
    // Loops take bit 0.
    CHECK(split_even_pairs(cs(1, {0, 0})).bits == std::vector<std::uint8_t>{0});
    CHECK(split_even_pairs(cs(1, {0, 0, 0, 0})).bits == std::vector<std::uint8_t>{0, 0});
    CHECK(split_even_pairs(cs(2, {0, 1, 1, 0})).bits == std::vector<std::uint8_t>{0, 0});
    CHECK(split_even_pairs(cs(3, {0, 1, 0, 2, 1, 2})).bits ==
          std::vector<std::uint8_t>{0, 1, 0});

    CHECK_THROWS_AS(split_even_pairs(cs(2, {0, 1, 0})), InvalidInput);
    CHECK_THROWS_AS(split_even_pairs(cs(2, {0, 1})), PreconditionViolation);
}

TEST_CASE("pair splitting halves every symbol count") {
    SUBCASE("exhaustive over short even binary strings") {
        for (std::size_t len : {2u, 4u, 6u, 8u}) {
            for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
                std::vector<Symbol> entries(len);
                for (std::size_t i = 0; i < len; ++i) entries[i] = (mask >> i) & 1;
                ColorString s = cs(2, entries);
                if (!is_even(s)) continue;
                check_split_halves(s, split_even_pairs(s));
            }
        }
    }
    SUBCASE("random even strings built by doubling") {
        std::mt19937_64 rng(4242);
        for (int t = 0; t < 300; ++t) {
            std::size_t r = 1 + rng() % 10;
            std::int32_t sigma = 1 + static_cast<std::int32_t>(rng() % 4);
            std::vector<Symbol> half(r);
            for (auto& c : half) c = static_cast<Symbol>(rng() % sigma);
            std::vector<Symbol> entries = half;
            entries.insert(entries.end(), half.begin(), half.end());
            std::shuffle(entries.begin(), entries.end(), rng);
            ColorString s = cs(sigma, entries);
            check_split_halves(s, split_even_pairs(s));
        }
    }
}

TEST_CASE("split application keeps pair order") {
    ColorString s = cs(3, {0, 1, 2, 0, 1, 2});
    SplitVector v{{1, 0, 1}};
    CHECK(apply_split(s, v) == std::vector<Symbol>{1, 2, 2});
    CHECK(apply_split_complement(s, v) == std::vector<Symbol>{0, 0, 1});
}

TEST_CASE("anagram detection") {
    CHECK(is_anagram(cs(2, {0, 0})));
    CHECK(is_anagram(cs(2, {0, 1, 1, 0})));
    CHECK_FALSE(is_anagram(cs(2, {0, 1})));
    CHECK_FALSE(is_anagram(cs(2, {0, 1, 0})));
    CHECK_FALSE(is_anagram(cs(2, {})));
    std::vector<Symbol> raw{2, 0, 0, 2};
    CHECK(is_anagram(std::span<const Symbol>(raw)));
}

TEST_CASE("abelian square scan orders by half length then start") {
    auto sq = find_abelian_square(cs(3, {0, 1, 2, 0, 2, 1}));
    REQUIRE(sq.has_value());
    CHECK(sq->start == 0);
    CHECK(sq->half_length == 3);

    sq = find_abelian_square(cs(2, {0, 0}));
    REQUIRE(sq.has_value());
    CHECK(sq->start == 0);
    CHECK(sq->half_length == 1);

    // (0,2) is also a square here, but the half-1 square at start 1 wins.
    sq = find_abelian_square(cs(2, {1, 0, 0, 1}));
    REQUIRE(sq.has_value());
    CHECK(sq->start == 1);
    CHECK(sq->half_length == 1);

    CHECK_FALSE(find_abelian_square(cs(2, {0, 1, 0})).has_value());
    CHECK_FALSE(find_abelian_square(cs(3, {})).has_value());
}

TEST_CASE("abelian-square-free words at the feasibility boundary") {
    auto w = generate_asf_word(1, 1);
    REQUIRE(w.has_value());
    CHECK(w->entries()[0] == 0);
    CHECK_FALSE(generate_asf_word(2, 1).has_value());

    w = generate_asf_word(3, 2);
    REQUIRE(w.has_value());
    CHECK(std::vector<Symbol>(w->entries().begin(), w->entries().end()) ==
          std::vector<Symbol>{0, 1, 0});
    CHECK_FALSE(generate_asf_word(4, 2).has_value());

    w = generate_asf_word(7, 3);
    REQUIRE(w.has_value());
    CHECK(std::vector<Symbol>(w->entries().begin(), w->entries().end()) ==
          std::vector<Symbol>{0, 1, 0, 2, 0, 1, 0});
    CHECK_FALSE(generate_asf_word(8, 3).has_value());
}

TEST_CASE("generated words carry no abelian square") {
    for (std::size_t len : {10u, 40u, 120u}) {
        auto w = generate_asf_word(len, 4);
        REQUIRE(w.has_value());
        CHECK(w->size() == len);
        CHECK_FALSE(find_abelian_square(*w).has_value());
    }
}

TEST_CASE("word generation validates input and respects its budget") {
    CHECK_THROWS_AS(generate_asf_word(0, 2), InvalidInput);
    CHECK_THROWS_AS(generate_asf_word(5, 0), InvalidInput);
    CHECK_THROWS_AS(generate_asf_word(64, 3, 10), BudgetExceeded);
}
