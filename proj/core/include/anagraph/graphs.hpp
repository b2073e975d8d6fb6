#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "anagraph/errors.hpp"

namespace anagraph {

using VertexId = std::uint32_t;

/// Undirected simple graph with contiguous vertex ids. Immutable after
/// construction; neighbour lists are kept sorted ascending.
class Graph {
public:
    Graph() = default;

    /// Throws InvalidInput on self-loops, duplicate edges or endpoints
    /// outside [0, vertex_count).
    Graph(std::size_t vertex_count, std::vector<std::pair<VertexId, VertexId>> edges);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Edges normalized to (smaller, larger), sorted lexicographically.
    std::span<const std::pair<VertexId, VertexId>> edges() const { return edges_; }

    std::span<const VertexId> neighbours(VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbours(v).size(); }
    std::size_t max_degree() const;

private:
    std::size_t vertex_count_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
};

/// Ladder family: n columns x_i, y_i (1-based names) with rungs, rails and
/// both diagonals between consecutive columns. 2n vertices, 5n-4 edges for
/// n >= 2, maximum degree 5, pathwidth 3.
struct LadderMeta {
    std::uint32_t columns = 0;

    VertexId x(std::uint32_t i) const { return 2 * (i - 1); }
    VertexId y(std::uint32_t i) const { return 2 * (i - 1) + 1; }
};

/// Clique chain family: n cliques of size k, consecutive cliques joined
/// completely. kn vertices, maximum degree 3k-1, pathwidth 2k-1.
struct CliqueChainMeta {
    std::uint32_t chain_length = 0;
    std::uint32_t clique_size = 0;

    /// Vertices of the i-th clique (1-based), ids (i-1)k .. ik-1.
    std::vector<VertexId> clique(std::uint32_t i) const;
    std::uint32_t clique_of(VertexId v) const { return v / clique_size + 1; }
};

/// A sequence of vertex bags. Valid for a graph when every vertex occurs
/// in some bag, every edge fits in some bag, and each vertex's bags form a
/// contiguous run. Width = max bag size - 1.
struct PathDecomposition {
    std::vector<std::vector<VertexId>> bags;

    int width() const;
};

struct DecompositionViolation {
    enum class Kind { MissingVertex, UncoveredEdge, BrokenContiguity, UnknownVertex };
    Kind kind;
    VertexId u = 0;
    VertexId v = 0;  // second endpoint for UncoveredEdge
};

/// Validation outcome: width is always computed, violations explain any
/// failed invariant (violations are data, not errors).
struct DecompositionReport {
    int width = -1;
    std::vector<DecompositionViolation> violations;

    bool ok() const { return violations.empty(); }
};

std::pair<Graph, LadderMeta> build_ladder(std::uint32_t n);

/// Bags {x_i, y_i, x_{i+1}, y_{i+1}} for i in 1..n-1; width 3.
/// Throws InvalidInput for n < 2.
PathDecomposition ladder_decomposition(std::uint32_t n);

std::pair<Graph, CliqueChainMeta> build_clique_chain(std::uint32_t n, std::uint32_t k);

/// Bags V_i ∪ V_{i+1} for i in 1..n-1; width 2k-1.
/// Throws InvalidInput for n < 2.
PathDecomposition clique_chain_decomposition(std::uint32_t n, std::uint32_t k);

Graph build_path_graph(std::uint32_t n);

DecompositionReport validate_decomposition(const Graph& g, const PathDecomposition& d);

/// Visits every simple path with >= 2 vertices exactly once, canonicalized
/// so the first endpoint id is smaller than the last. Deterministic order:
/// depth-first from ascending start vertices over ascending neighbours.
/// The visitor returns false to stop early. Returns the number of paths
/// visited; throws EnumerationOverflow when more than `cap` paths would be
/// visited.
std::uint64_t for_each_simple_path(const Graph& g, std::uint64_t cap,
                                   const std::function<bool(std::span<const VertexId>)>& visit);

/// Materialized variant of for_each_simple_path.
std::vector<std::vector<VertexId>> enumerate_simple_paths(const Graph& g, std::uint64_t cap);

}  // namespace anagraph
