#include "anagraph/oracle.hpp"

#include <algorithm>
#include <cstddef>

#include "anagraph/errors.hpp"

namespace anagraph {

namespace {

bool halves_agree(const std::vector<Symbol>& colours) {
    std::size_t half = colours.size() / 2;
    std::vector<Symbol> a(colours.begin(), colours.begin() + half);
    std::vector<Symbol> b(colours.begin() + half, colours.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

struct DirectedWalker {
    const Graph& g;
    const Colouring* phi;  // null when only counting
    std::uint64_t work_cap;
    std::uint64_t work = 0;
    std::vector<VertexId> path;
    std::vector<char> on_path;
    std::vector<Symbol> colours;
    std::optional<std::vector<VertexId>> found;

    DirectedWalker(const Graph& g, const Colouring* phi, std::uint64_t work_cap)
        : g(g), phi(phi), work_cap(work_cap), on_path(g.vertex_count(), 0) {}

    void dfs(VertexId v) {
        path.push_back(v);
        on_path[v] = 1;
        if (phi) colours.push_back((*phi)[v]);
        if (path.size() >= 2) {
            if (work == work_cap) throw EnumerationOverflow(work_cap);
            ++work;
            if (phi && path.size() % 2 == 0 && halves_agree(colours)) found = path;
        }
        if (!found) {
            for (VertexId u : g.neighbours(v)) {
                if (on_path[u]) continue;
                dfs(u);
                if (found) break;
            }
        }
        if (phi) colours.pop_back();
        on_path[v] = 0;
        path.pop_back();
    }

    void run() {
        for (VertexId start = 0; start < g.vertex_count(); ++start) {
            dfs(start);
            if (found) return;
        }
    }
};

}  // namespace

std::optional<std::vector<VertexId>> brute_find_anagram_path(const Graph& g, const Colouring& phi,
                                                             std::uint64_t work_cap) {
    if (phi.size() != g.vertex_count())
        throw InvalidInput("colouring must be total on the graph");
    DirectedWalker walker(g, &phi, work_cap);
    walker.run();
    return walker.found;
}

std::uint64_t brute_count_directed_paths(const Graph& g, std::uint64_t work_cap) {
    DirectedWalker walker(g, nullptr, work_cap);
    walker.run();
    return walker.work;
}

namespace {

struct MinColoursSearch {
    const Graph& g;
    std::uint64_t work_cap;
    std::uint64_t work = 0;
    std::int32_t classes = 0;
    std::vector<Symbol> assignment;
    std::optional<Colouring> witness;

    MinColoursSearch(const Graph& g, std::uint64_t work_cap)
        : g(g), work_cap(work_cap), assignment(g.vertex_count(), 0) {}

    void spend(std::uint64_t units) {
        if (work_cap - work < units) throw EnumerationOverflow(work_cap);
        work += units;
    }

    // Restricted growth: vertex 0 takes colour 0 and every later vertex
    // takes at most one more than the running maximum, so each set
    // partition is tried exactly once.
    void extend(std::size_t i, Symbol used) {
        if (witness) return;
        if (i == g.vertex_count()) {
            if (used != classes) return;  // already covered at a smaller count
            spend(1);
            Colouring phi(Alphabet{classes}, assignment);
            std::uint64_t inner_cap = work_cap - work;
            DirectedWalker walker(g, &phi, inner_cap);
            try {
                walker.run();
            } catch (const EnumerationOverflow&) {
                throw EnumerationOverflow(work_cap);
            }
            work += walker.work;
            if (!walker.found) witness = std::move(phi);
            return;
        }
        Symbol limit = std::min<Symbol>(used, classes - 1);
        for (Symbol c = 0; c <= limit; ++c) {
            assignment[i] = c;
            extend(i + 1, std::max(used, c + 1));
            if (witness) return;
        }
    }
};

}  // namespace

std::optional<MinColoursResult> brute_min_afcn(const Graph& g, std::int32_t max_colours,
                                               std::uint64_t work_cap) {
    MinColoursResult out;
    if (g.vertex_count() == 0) {
        out.witness = Colouring(Alphabet{0}, {});
        return out;
    }
    std::int32_t highest =
        std::min<std::int32_t>(max_colours, static_cast<std::int32_t>(g.vertex_count()));
    MinColoursSearch search(g, work_cap);
    for (std::int32_t c = 1; c <= highest; ++c) {
        search.classes = c;
        search.extend(0, 0);
        if (search.witness) {
            out.colours = c;
            out.witness = std::move(*search.witness);
            return out;
        }
    }
    return std::nullopt;
}

std::optional<SplitVector> brute_split(const ColorString& s) {
    if (s.size() % 2 != 0) throw InvalidInput("split needs an even-length string");
    const std::size_t r = s.size() / 2;
    if (r > 25) throw InvalidInput("brute_split is limited to 25 pairs");

    std::vector<std::size_t> counts = symbol_counts(s);
    for (std::size_t c : counts)
        if (c % 2 != 0) throw PreconditionViolation("every symbol count must be even");

    std::vector<std::size_t> chosen(counts.size());
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
        std::fill(chosen.begin(), chosen.end(), 0);
        for (std::size_t p = 0; p < r; ++p) {
            std::size_t bit = (mask >> (r - 1 - p)) & 1u;
            ++chosen[static_cast<std::size_t>(s[2 * p + bit])];
        }
        bool balanced = true;
        for (std::size_t a = 0; a < counts.size(); ++a)
            if (chosen[a] * 2 != counts[a]) balanced = false;
        if (!balanced) continue;
        SplitVector out;
        out.bits.resize(r);
        for (std::size_t p = 0; p < r; ++p)
            out.bits[p] = static_cast<std::uint8_t>((mask >> (r - 1 - p)) & 1u);
        return out;
    }
    return std::nullopt;
}

namespace {

bool brute_place(const std::vector<std::vector<std::size_t>>& home, std::size_t sym,
                 std::vector<std::size_t>& load, std::size_t capacity,
                 std::vector<std::size_t>& placed) {
    if (sym == home.size()) return true;
    for (std::size_t idx : home[sym]) {
        if (load[idx] == capacity) continue;
        ++load[idx];
        placed[sym] = idx;
        if (brute_place(home, sym + 1, load, capacity, placed)) return true;
        --load[idx];
    }
    return false;
}

}  // namespace

std::optional<Assignment> brute_assignment(const ColourSets& sets, std::size_t capacity) {
    std::vector<Symbol> symbols;
    for (const auto& set : sets)
        for (Symbol c : set) symbols.push_back(c);
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());

    std::vector<std::vector<std::size_t>> home(symbols.size());
    for (std::size_t idx = 0; idx < sets.size(); ++idx)
        for (Symbol c : sets[idx]) {
            std::size_t sym =
                std::lower_bound(symbols.begin(), symbols.end(), c) - symbols.begin();
            if (home[sym].empty() || home[sym].back() != idx) home[sym].push_back(idx);
        }

    std::vector<std::size_t> load(sets.size(), 0);
    std::vector<std::size_t> placed(symbols.size(), 0);
    if (!brute_place(home, 0, load, capacity, placed)) return std::nullopt;

    Assignment out;
    out.capacity = capacity;
    for (std::size_t sym = 0; sym < symbols.size(); ++sym)
        out.index_of[symbols[sym]] = placed[sym];
    return out;
}

namespace {

bool suffix_square_free(const std::vector<Symbol>& word) {
    // Checks only factors ending at the last position; earlier factors
    // were checked when their own last symbol was appended.
    const std::size_t end = word.size();
    for (std::size_t half = 1; 2 * half <= end; ++half) {
        std::vector<Symbol> a(word.begin() + end - 2 * half, word.begin() + end - half);
        std::vector<Symbol> b(word.begin() + end - half, word.begin() + end);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a == b) return false;
    }
    return true;
}

struct AsfMaxSearch {
    std::int32_t sigma;
    std::uint64_t budget;
    std::vector<Symbol> word;
    AsfMaxResult best;

    void extend() {
        if (word.size() > best.max_length) {
            best.max_length = word.size();
            best.longest = word;
        }
        // Charge the quadratic cost of the naive suffix check up front;
        // a per-node charge would let a 4-letter run grow the word (and
        // the per-node cost) without bound before the budget bites.
        const std::uint64_t windows = (word.size() + 1) / 2;
        const std::uint64_t node_cost = 1 + windows * (windows + 1) / 2;
        for (Symbol c = 0; c < sigma; ++c) {
            if (budget < node_cost) throw BudgetExceeded(0);
            budget -= node_cost;
            word.push_back(c);
            if (suffix_square_free(word)) extend();
            word.pop_back();
        }
    }
};

}  // namespace

AsfMaxResult brute_asf_max(std::int32_t alphabet_size, std::uint64_t work_budget) {
    if (alphabet_size <= 0) throw InvalidInput("alphabet size must be positive");
    AsfMaxSearch search;
    search.sigma = alphabet_size;
    search.budget = work_budget;
    try {
        search.extend();
    } catch (const BudgetExceeded&) {
        throw BudgetExceeded(work_budget);
    }
    return search.best;
}

}  // namespace anagraph
