#include "anagraph/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace anagraph {

Graph::Graph(std::size_t vertex_count, std::vector<std::pair<VertexId, VertexId>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    for (auto& [u, v] : edges_) {
        if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
        if (u >= vertex_count_ || v >= vertex_count_)
            throw InvalidInput("edge endpoint outside vertex range");
        if (u > v) std::swap(u, v);
    }
    std::ranges::sort(edges_);
    if (std::ranges::adjacent_find(edges_) != edges_.end())
        throw InvalidInput("duplicate edge");
    adjacency_.resize(vertex_count_);
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::ranges::sort(nbrs);
}

std::span<const VertexId> Graph::neighbours(VertexId v) const {
    if (v >= vertex_count_) throw InvalidInput("vertex outside range");
    return adjacency_[v];
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    const auto nbrs = neighbours(u);
    return std::ranges::binary_search(nbrs, v);
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
    return best;
}

std::vector<VertexId> CliqueChainMeta::clique(std::uint32_t i) const {
    std::vector<VertexId> out(clique_size);
    std::iota(out.begin(), out.end(), (i - 1) * clique_size);
    return out;
}

int PathDecomposition::width() const {
    std::size_t largest = 0;
    for (const auto& bag : bags) largest = std::max(largest, bag.size());
    return static_cast<int>(largest) - 1;
}

std::pair<Graph, LadderMeta> build_ladder(std::uint32_t n) {
    if (n == 0) throw InvalidInput("ladder needs at least one column");
    const LadderMeta meta{n};
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(n >= 2 ? 5 * static_cast<std::size_t>(n) - 4 : 1);
    for (std::uint32_t i = 1; i <= n; ++i) edges.emplace_back(meta.x(i), meta.y(i));
    for (std::uint32_t i = 1; i + 1 <= n; ++i) {
        edges.emplace_back(meta.x(i), meta.x(i + 1));
        edges.emplace_back(meta.y(i), meta.y(i + 1));
        edges.emplace_back(meta.x(i), meta.y(i + 1));
        edges.emplace_back(meta.x(i + 1), meta.y(i));
    }
    return {Graph(2 * static_cast<std::size_t>(n), std::move(edges)), meta};
}

PathDecomposition ladder_decomposition(std::uint32_t n) {
    if (n < 2) throw InvalidInput("ladder decomposition needs n >= 2");
    const LadderMeta meta{n};
    PathDecomposition d;
    d.bags.reserve(n - 1);
    for (std::uint32_t i = 1; i + 1 <= n; ++i)
        d.bags.push_back({meta.x(i), meta.y(i), meta.x(i + 1), meta.y(i + 1)});
    return d;
}

std::pair<Graph, CliqueChainMeta> build_clique_chain(std::uint32_t n, std::uint32_t k) {
    if (n == 0) throw InvalidInput("clique chain needs at least one clique");
    if (k < 3) throw InvalidInput("clique chain needs cliques of size at least 3");
    const CliqueChainMeta meta{n, k};
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::uint32_t i = 1; i <= n; ++i) {
        const auto members = meta.clique(i);
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                edges.emplace_back(members[a], members[b]);
        if (i < n)
            for (VertexId u : members)
                for (VertexId v : meta.clique(i + 1)) edges.emplace_back(u, v);
    }
    return {Graph(static_cast<std::size_t>(n) * k, std::move(edges)), meta};
}

PathDecomposition clique_chain_decomposition(std::uint32_t n, std::uint32_t k) {
    if (n < 2) throw InvalidInput("clique chain decomposition needs n >= 2");
    if (k < 3) throw InvalidInput("clique chain needs cliques of size at least 3");
    const CliqueChainMeta meta{n, k};
    PathDecomposition d;
    d.bags.reserve(n - 1);
    for (std::uint32_t i = 1; i + 1 <= n; ++i) {
        auto bag = meta.clique(i);
        const auto next = meta.clique(i + 1);
        bag.insert(bag.end(), next.begin(), next.end());
        d.bags.push_back(std::move(bag));
    }
    return d;
}

Graph build_path_graph(std::uint32_t n) {
    if (n == 0) throw InvalidInput("path needs at least one vertex");
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(n - 1);
    for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

DecompositionReport validate_decomposition(const Graph& g, const PathDecomposition& d) {
    DecompositionReport report;
    report.width = d.width();

    const std::size_t n = g.vertex_count();
    // Occurrence runs per vertex; bags are treated as sets.
    std::vector<std::ptrdiff_t> first(n, -1), last(n, -1);
    std::vector<std::size_t> hits(n, 0);
    for (std::size_t b = 0; b < d.bags.size(); ++b) {
        std::vector<VertexId> bag = d.bags[b];
        std::ranges::sort(bag);
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        for (VertexId v : bag) {
            if (v >= n) {
                report.violations.push_back(
                    {DecompositionViolation::Kind::UnknownVertex, v, 0});
                continue;
            }
            if (first[v] < 0) first[v] = static_cast<std::ptrdiff_t>(b);
            last[v] = static_cast<std::ptrdiff_t>(b);
            ++hits[v];
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        if (first[v] < 0) {
            report.violations.push_back({DecompositionViolation::Kind::MissingVertex, v, 0});
        } else if (static_cast<std::size_t>(last[v] - first[v]) + 1 != hits[v]) {
            report.violations.push_back({DecompositionViolation::Kind::BrokenContiguity, v, 0});
        }
    }
    for (const auto& [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& bag : d.bags) {
            if (std::ranges::find(bag, u) != bag.end() &&
                std::ranges::find(bag, v) != bag.end()) {
                covered = true;
                break;
            }
        }
        if (!covered)
            report.violations.push_back({DecompositionViolation::Kind::UncoveredEdge, u, v});
    }
    return report;
}

namespace {

struct PathEnumerator {
    const Graph& g;
    std::uint64_t cap;
    const std::function<bool(std::span<const VertexId>)>& visit;
    std::vector<VertexId> path;
    std::vector<std::uint8_t> on_path;
    std::uint64_t yielded = 0;
    bool stopped = false;

    // Canonical paths have front < back, so each undirected path is
    // reported from exactly one of its two traversals.
    void dfs(VertexId v) {
        path.push_back(v);
        on_path[v] = 1;
        if (path.size() >= 2 && path.front() < path.back()) {
            if (yielded == cap) throw EnumerationOverflow(cap);
            ++yielded;
            if (!visit(path)) stopped = true;
        }
        if (!stopped) {
            for (VertexId w : g.neighbours(v)) {
                if (on_path[w]) continue;
                dfs(w);
                if (stopped) break;
            }
        }
        on_path[v] = 0;
        path.pop_back();
    }
};

}  // namespace

std::uint64_t for_each_simple_path(const Graph& g, std::uint64_t cap,
                                   const std::function<bool(std::span<const VertexId>)>& visit) {
    PathEnumerator e{g, cap, visit, {}, std::vector<std::uint8_t>(g.vertex_count(), 0)};
    for (VertexId start = 0; start < g.vertex_count() && !e.stopped; ++start) e.dfs(start);
    return e.yielded;
}

std::vector<std::vector<VertexId>> enumerate_simple_paths(const Graph& g, std::uint64_t cap) {
    std::vector<std::vector<VertexId>> out;
    for_each_simple_path(g, cap, [&](std::span<const VertexId> p) {
        out.emplace_back(p.begin(), p.end());
        return true;
    });
    return out;
}

}  // namespace anagraph
