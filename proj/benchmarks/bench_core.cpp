#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <benchmark/benchmark.h>

#include <anagraph/adversary.hpp>
#include <anagraph/colouring.hpp>
#include <anagraph/graphs.hpp>
#include <anagraph/words.hpp>

using namespace anagraph;

namespace {

ColorString random_string(std::size_t length, std::int32_t sigma, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Symbol> entries(length);
    for (auto& c : entries) c = static_cast<Symbol>(rng() % sigma);
    return ColorString(Alphabet{sigma}, std::move(entries));
}

ColorString random_even_string(std::size_t pairs, std::int32_t sigma, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Symbol> half(pairs);
    for (auto& c : half) c = static_cast<Symbol>(rng() % sigma);
    std::vector<Symbol> entries = half;
    entries.insert(entries.end(), half.begin(), half.end());
    std::shuffle(entries.begin(), entries.end(), rng);
    return ColorString(Alphabet{sigma}, std::move(entries));
}

Colouring random_colouring(std::size_t vertices, std::int32_t sigma, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Symbol> assignment(vertices);
    for (auto& c : assignment) c = static_cast<Symbol>(rng() % sigma);
    return Colouring{Alphabet{sigma}, std::move(assignment)};
}

void BM_FindEvenSubstring(benchmark::State& state) {
    ColorString s = random_string(static_cast<std::size_t>(state.range(0)), 2, 11);
    for (auto _ : state) benchmark::DoNotOptimize(find_even_substring(s));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FindEvenSubstring)->Arg(64)->Arg(512)->Arg(4096);

void BM_SplitEvenPairs(benchmark::State& state) {
    ColorString s = random_even_string(static_cast<std::size_t>(state.range(0)), 4, 13);
    for (auto _ : state) benchmark::DoNotOptimize(split_even_pairs(s));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SplitEvenPairs)->Arg(32)->Arg(256)->Arg(2048);

void BM_LadderAdversary(benchmark::State& state) {
    auto n = static_cast<std::uint32_t>(state.range(0));
    // 3 symbols keep 2^sigma below the column count, so a path always exists.
    Colouring phi = random_colouring(2 * std::size_t{n}, 3, 17);
    for (auto _ : state) benchmark::DoNotOptimize(find_anagram_ladder(n, phi));
}
BENCHMARK(BM_LadderAdversary)->Arg(16)->Arg(64)->Arg(256);

void BM_ChainAdversary(benchmark::State& state) {
    auto n = static_cast<std::uint32_t>(state.range(0));
    const std::uint32_t k = 4;
    Colouring phi = random_colouring(std::size_t{n} * k, 5, 19);
    for (auto _ : state) benchmark::DoNotOptimize(find_anagram_clique_chain(n, k, phi));
}
BENCHMARK(BM_ChainAdversary)->Arg(8)->Arg(32)->Arg(128);

void BM_GenerateAsfWord(benchmark::State& state) {
    auto length = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(generate_asf_word(length, 4, 1'000'000'000));
}
BENCHMARK(BM_GenerateAsfWord)->Arg(64)->Arg(256)->Arg(1024);

void BM_VerifyAnagramFree(benchmark::State& state) {
    auto n = static_cast<std::uint32_t>(state.range(0));
    auto [g, meta] = build_ladder(n);
    Colouring phi = dnc_colour(g, ladder_decomposition(n));
    for (auto _ : state) benchmark::DoNotOptimize(verify_anagram_free(g, phi, 10'000'000));
}
BENCHMARK(BM_VerifyAnagramFree)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
