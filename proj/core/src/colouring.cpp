#include "anagraph/colouring.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace anagraph {

Colouring::Colouring(Alphabet alphabet_in, std::vector<Symbol> assignment_in)
    : alphabet(alphabet_in), assignment(std::move(assignment_in)) {
    for (Symbol s : assignment) {
        if (s < 0 || s >= alphabet.size)
            throw InvalidInput("colour " + std::to_string(s) + " outside alphabet of size " +
                               std::to_string(alphabet.size));
    }
}

ColorString colour_string_of(const Colouring& phi, std::span<const VertexId> path) {
    std::vector<Symbol> entries;
    entries.reserve(path.size());
    for (VertexId v : path) entries.push_back(phi[v]);
    return ColorString(phi.alphabet, std::move(entries));
}

Verdict verify_anagram_free(const Graph& g, const Colouring& phi, std::uint64_t cap) {
    if (phi.size() != g.vertex_count())
        throw InvalidInput("colouring does not cover the graph's vertices");

    Verdict verdict;
    // Running half-vs-half balance per symbol, reset via the touched list
    // instead of clearing the whole alphabet each path.
    std::vector<std::ptrdiff_t> balance(static_cast<std::size_t>(phi.alphabet.size), 0);
    std::vector<std::size_t> touched;
    auto spells_anagram = [&](std::span<const VertexId> path) {
        const std::size_t half = path.size() / 2;
        touched.clear();
        for (std::size_t i = 0; i < path.size(); ++i) {
            const auto a = static_cast<std::size_t>(phi[path[i]]);
            if (balance[a] == 0) touched.push_back(a);
            balance[a] += (i < half) ? 1 : -1;
        }
        bool anagram = true;
        for (std::size_t a : touched) {
            if (balance[a] != 0) anagram = false;
            balance[a] = 0;
        }
        return anagram;
    };

    try {
        verdict.paths_checked =
            for_each_simple_path(g, cap, [&](std::span<const VertexId> path) {
                if (path.size() % 2 != 0 || !spells_anagram(path)) return true;
                verdict.kind = Verdict::Kind::Counterexample;
                verdict.counterexample.assign(path.begin(), path.end());
                return false;
            });
    } catch (const EnumerationOverflow&) {
        verdict.kind = Verdict::Kind::Unknown;
        verdict.paths_checked = cap;
    }
    return verdict;
}

Colouring colour_path_asf(std::uint32_t n, std::uint64_t node_budget) {
    if (n == 0) throw InvalidInput("path needs at least one vertex");
    auto word = generate_asf_word(n, 4, node_budget);
    if (!word)
        throw PreconditionViolation("no abelian-square-free word of that length over 4 symbols");
    return Colouring(word->alphabet(),
                     std::vector<Symbol>(word->entries().begin(), word->entries().end()));
}

namespace {

struct DncState {
    const PathDecomposition& d;
    std::vector<std::pair<int, int>> depth_slot;  // per vertex; (-1,-1) = uncoloured

    void colour_range(std::size_t lo, std::size_t hi, int depth) {
        if (lo >= hi) return;
        const std::size_t mid = lo + (hi - lo) / 2;
        int slot = 0;
        for (VertexId v : d.bags[mid]) {
            if (depth_slot[v].first >= 0) continue;
            depth_slot[v] = {depth, slot++};
        }
        colour_range(lo, mid, depth + 1);
        colour_range(mid + 1, hi, depth + 1);
    }
};

}  // namespace

Colouring dnc_colour(const Graph& g, const PathDecomposition& d) {
    const auto report = validate_decomposition(g, d);
    if (!report.ok())
        throw PreconditionViolation("decomposition is not valid for the graph");

    DncState state{d, std::vector<std::pair<int, int>>(g.vertex_count(), {-1, -1})};
    state.colour_range(0, d.bags.size(), 0);

    // Flatten the used (depth, slot) palette to dense symbols.
    std::map<std::pair<int, int>, Symbol> palette;
    for (const auto& ds : state.depth_slot) palette.emplace(ds, 0);
    Symbol next = 0;
    for (auto& [ds, symbol] : palette) symbol = next++;

    std::vector<Symbol> assignment(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        assignment[v] = palette.at(state.depth_slot[v]);
    return Colouring(Alphabet{next}, std::move(assignment));
}

}  // namespace anagraph
