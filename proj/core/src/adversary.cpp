#include "anagraph/adversary.hpp"

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <unordered_set>

#include "anagraph/errors.hpp"

namespace anagraph {

namespace {

std::vector<Symbol> colours_along(const Colouring& phi, const std::vector<VertexId>& path) {
    std::vector<Symbol> out;
    out.reserve(path.size());
    for (VertexId v : path) out.push_back(phi[v]);
    return out;
}

}  // namespace

PathCheck check_anagram_path(const Graph& g, const Colouring& phi, const AnagramPath& p) {
    PathCheck result;
    const auto& vs = p.vertices;
    bool in_range = !vs.empty();
    for (VertexId v : vs)
        if (v >= g.vertex_count()) in_range = false;

    std::unordered_set<VertexId> distinct(vs.begin(), vs.end());
    result.simple =
        in_range && vs.size() >= 2 && vs.size() % 2 == 0 && distinct.size() == vs.size();

    if (in_range && vs.size() >= 2) {
        result.adjacent = true;
        for (std::size_t i = 0; i + 1 < vs.size(); ++i)
            if (!g.adjacent(vs[i], vs[i + 1])) result.adjacent = false;
    }

    if (in_range && phi.size() == g.vertex_count() && p.colours.size() == vs.size()) {
        result.colours_match = true;
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (p.colours[i] != phi[vs[i]]) result.colours_match = false;
    }

    result.anagram = is_anagram(std::span<const Symbol>(p.colours));
    return result;
}

std::optional<AnagramPath> find_anagram_ladder(std::uint32_t n, const Colouring& phi) {
    if (n == 0) throw InvalidInput("ladder needs at least one column");
    if (phi.size() != 2 * static_cast<std::size_t>(n))
        throw InvalidInput("colouring does not cover the 2n ladder vertices");

    // Vertex ids already interleave the two rows column by column, so the
    // assignment itself is the column-paired string.
    ColorString s(phi.alphabet, phi.assignment);
    auto witness = find_even_substring(s);
    if (!witness) return std::nullopt;

    std::vector<Symbol> sub(phi.assignment.begin() + 2 * witness->begin_pair,
                            phi.assignment.begin() + 2 * witness->end_pair);
    SplitVector split = split_even_pairs(ColorString(phi.alphabet, std::move(sub)));

    // bit 0 keeps row x (even id), bit 1 row y; the complement row walks back.
    AnagramPath out;
    const std::size_t m = witness->end_pair - witness->begin_pair;
    out.vertices.reserve(2 * m);
    for (std::size_t j = 0; j < m; ++j)
        out.vertices.push_back(static_cast<VertexId>(2 * (witness->begin_pair + j) + split.bits[j]));
    for (std::size_t j = m; j-- > 0;)
        out.vertices.push_back(
            static_cast<VertexId>(2 * (witness->begin_pair + j) + (1 - split.bits[j])));
    out.colours = colours_along(phi, out.vertices);
    out.split = std::move(split);
    out.interval = {witness->begin_pair, witness->end_pair - 1};
    out.source = "even-substring";
    return out;
}

namespace {

/// Depth-first augmentation over the residual graph of the symbol-to-set
/// assignment; visited marks make each round linear in the edge count.
struct AssignmentSolver {
    const std::vector<std::vector<std::size_t>>& home;  // symbol -> candidate set indices
    std::size_t capacity;
    std::vector<std::vector<std::size_t>> at;  // set index -> symbols held
    std::vector<std::size_t> placed_at;        // symbol -> set index or npos
    std::vector<char> visited;                 // per set index, reset each round

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    AssignmentSolver(const std::vector<std::vector<std::size_t>>& home, std::size_t set_count,
                     std::size_t capacity)
        : home(home),
          capacity(capacity),
          at(set_count),
          placed_at(home.size(), npos),
          visited(set_count, 0) {}

    void attach(std::size_t sym, std::size_t idx) {
        at[idx].push_back(sym);
        placed_at[sym] = idx;
    }

    void detach(std::size_t sym, std::size_t idx) {
        auto& held = at[idx];
        held.erase(std::find(held.begin(), held.end(), sym));
        placed_at[sym] = npos;
    }

    bool augment(std::size_t sym) {
        for (std::size_t idx : home[sym]) {
            if (visited[idx]) continue;
            visited[idx] = 1;
            if (at[idx].size() < capacity) {
                attach(sym, idx);
                return true;
            }
            // Full set: try relocating one occupant along the residual
            // graph. Iterate a snapshot, since detach/attach reorder at[idx].
            std::vector<std::size_t> occupants = at[idx];
            for (std::size_t occupant : occupants) {
                detach(occupant, idx);
                if (augment(occupant)) {
                    attach(sym, idx);
                    return true;
                }
                attach(occupant, idx);
            }
        }
        return false;
    }

    bool run() {
        for (std::size_t sym = 0; sym < home.size(); ++sym) {
            std::fill(visited.begin(), visited.end(), 0);
            if (!augment(sym)) return false;
        }
        return true;
    }
};

}  // namespace

std::optional<Assignment> solve_capacitated_assignment(const ColourSets& sets,
                                                       std::size_t capacity) {
    std::vector<Symbol> symbols;
    for (const auto& set : sets)
        for (Symbol c : set) symbols.push_back(c);
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());

    std::vector<std::vector<std::size_t>> home(symbols.size());
    for (std::size_t idx = 0; idx < sets.size(); ++idx) {
        for (Symbol c : sets[idx]) {
            std::size_t sym =
                std::lower_bound(symbols.begin(), symbols.end(), c) - symbols.begin();
            if (home[sym].empty() || home[sym].back() != idx) home[sym].push_back(idx);
        }
    }

    AssignmentSolver solver(home, sets.size(), capacity);
    if (!solver.run()) return std::nullopt;

    Assignment out;
    out.capacity = capacity;
    for (std::size_t sym = 0; sym < symbols.size(); ++sym)
        out.index_of[symbols[sym]] = solver.placed_at[sym];
    return out;
}

std::optional<IntervalWitness> find_even_interval(const ColourSets& sets, std::uint32_t k) {
    if (k < 3) throw PreconditionViolation("clique size must be at least 3");
    for (const auto& set : sets) {
        if (set.size() != k) throw PreconditionViolation("every colour set must have size k");
        std::unordered_set<Symbol> distinct(set.begin(), set.end());
        if (distinct.size() != set.size())
            throw PreconditionViolation("colour sets must not repeat a colour");
    }

    const std::size_t n = sets.size();
    for (std::size_t length = 1; length <= n; ++length) {
        for (std::size_t start = 0; start + length <= n; ++start) {
            std::unordered_map<Symbol, std::size_t> counts;
            for (std::size_t l = 0; l < length; ++l)
                for (Symbol c : sets[start + l]) ++counts[c];

            std::unordered_set<Symbol> odd;
            for (const auto& [c, count] : counts)
                if (count % 2 == 1) odd.insert(c);

            IntervalWitness witness;
            witness.first = start;
            witness.last = start + length - 1;

            if (odd.empty()) {
                witness.subsets.assign(sets.begin() + start, sets.begin() + start + length);
                for (auto& subset : witness.subsets)
                    std::sort(subset.begin(), subset.end());
                return witness;
            }

            // Route each odd-count colour to one containing set, at most
            // k-2 removals per set, so every subset keeps >= 2 colours.
            ColourSets odd_view(length);
            for (std::size_t l = 0; l < length; ++l)
                for (Symbol c : sets[start + l])
                    if (odd.count(c)) odd_view[l].push_back(c);

            auto assignment = solve_capacitated_assignment(odd_view, k - 2);
            if (!assignment) continue;

            witness.subsets.resize(length);
            for (std::size_t l = 0; l < length; ++l) {
                for (Symbol c : sets[start + l])
                    if (!odd.count(c) || assignment->index_of.at(c) != l)
                        witness.subsets[l].push_back(c);
                std::sort(witness.subsets[l].begin(), witness.subsets[l].end());
            }
            return witness;
        }
    }
    return std::nullopt;
}

RedBlueLabelling red_blue_label(const std::vector<std::vector<VertexId>>& subsets) {
    std::size_t total = 0;
    for (const auto& subset : subsets) {
        if (subset.size() < 2) throw InvalidInput("every subset must have at least 2 vertices");
        total += subset.size();
    }
    if (total % 2 != 0) throw InvalidInput("total vertex count must be even");

    RedBlueLabelling out;
    out.red.resize(subsets.size());
    out.blue.resize(subsets.size());
    std::size_t odd_seen = 0;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        std::vector<VertexId> sorted(subsets[i].begin(), subsets[i].end());
        std::sort(sorted.begin(), sorted.end());
        std::size_t reds = sorted.size() / 2;
        if (sorted.size() % 2 == 1) {
            // Odd subsets alternate the surplus label so the totals balance.
            if (odd_seen % 2 == 0) ++reds;
            ++odd_seen;
        }
        out.red[i].assign(sorted.begin(), sorted.begin() + reds);
        out.blue[i].assign(sorted.begin() + reds, sorted.end());
    }
    return out;
}

std::vector<std::pair<VertexId, VertexId>> bichromatic_matching(const RedBlueLabelling& l) {
    if (l.red.size() != l.blue.size())
        throw InvalidInput("labelling must cover the same subsets on both sides");

    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::vector<VertexId> spare_red;
    std::vector<VertexId> spare_blue;
    for (std::size_t i = 0; i < l.red.size(); ++i) {
        std::size_t within = std::min(l.red[i].size(), l.blue[i].size());
        for (std::size_t j = 0; j < within; ++j) pairs.emplace_back(l.red[i][j], l.blue[i][j]);
        for (std::size_t j = within; j < l.red[i].size(); ++j) spare_red.push_back(l.red[i][j]);
        for (std::size_t j = within; j < l.blue[i].size(); ++j) spare_blue.push_back(l.blue[i][j]);
    }
    if (spare_red.size() != spare_blue.size())
        throw InvalidInput("labelling must have equally many red and blue vertices");
    for (std::size_t j = 0; j < spare_red.size(); ++j)
        pairs.emplace_back(spare_red[j], spare_blue[j]);
    return pairs;
}

std::optional<AnagramPath> find_anagram_clique_chain(std::uint32_t n, std::uint32_t k,
                                                     const Colouring& phi) {
    auto [g, meta] = build_clique_chain(n, k);
    if (phi.size() != g.vertex_count())
        throw InvalidInput("colouring does not cover the kn chain vertices");

    // Any same-coloured edge is already a 2-vertex anagram path.
    for (auto [u, v] : g.edges()) {
        if (phi[u] != phi[v]) continue;
        AnagramPath out;
        out.vertices = {u, v};
        out.colours = {phi[u], phi[v]};
        out.split.bits = {0};
        out.interval = {meta.clique_of(u) - 1, meta.clique_of(v) - 1};
        out.source = "monochromatic-edge";
        return out;
    }

    // With no monochromatic edge, each clique sees k distinct colours.
    ColourSets sets(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < k; ++j)
            sets[i].push_back(phi[static_cast<VertexId>(i) * k + j]);
    }

    auto witness = find_even_interval(sets, k);
    if (!witness) return std::nullopt;

    // Map the surviving colours back to vertices, one subset per clique.
    std::vector<std::vector<VertexId>> vertex_subsets(witness->subsets.size());
    for (std::size_t l = 0; l < witness->subsets.size(); ++l) {
        const auto& keep = witness->subsets[l];
        VertexId base = static_cast<VertexId>((witness->first + l) * k);
        for (std::uint32_t j = 0; j < k; ++j)
            if (std::binary_search(keep.begin(), keep.end(), phi[base + j]))
                vertex_subsets[l].push_back(base + j);
    }

    auto labelling = red_blue_label(vertex_subsets);
    auto pairs = bichromatic_matching(labelling);

    std::vector<Symbol> pair_string;
    pair_string.reserve(2 * pairs.size());
    for (auto [u, w] : pairs) {
        pair_string.push_back(phi[u]);
        pair_string.push_back(phi[w]);
    }
    SplitVector split = split_even_pairs(ColorString(phi.alphabet, std::move(pair_string)));

    std::unordered_set<VertexId> outbound;
    for (std::size_t p = 0; p < pairs.size(); ++p)
        outbound.insert(split.bits[p] == 0 ? pairs[p].first : pairs[p].second);

    // Chosen halves walk the interval forward, complements walk it back;
    // every subset holds at least one of each, so consecutive path
    // vertices share a clique or sit in consecutive cliques.
    AnagramPath out;
    for (const auto& subset : vertex_subsets)
        for (VertexId v : subset)
            if (outbound.count(v)) out.vertices.push_back(v);
    for (std::size_t l = vertex_subsets.size(); l-- > 0;)
        for (VertexId v : vertex_subsets[l])
            if (!outbound.count(v)) out.vertices.push_back(v);

    out.colours = colours_along(phi, out.vertices);
    out.split = std::move(split);
    out.interval = {witness->first, witness->last};
    out.source = "even-interval";
    return out;
}

}  // namespace anagraph
