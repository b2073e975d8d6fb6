#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "anagraph/graphs.hpp"
#include "anagraph/words.hpp"

namespace anagraph {

/// Total mapping from vertex ids to colour symbols.
struct Colouring {
    Alphabet alphabet;
    std::vector<Symbol> assignment;  // indexed by vertex id

    Colouring() = default;
    /// Throws InvalidInput if a symbol falls outside the alphabet.
    Colouring(Alphabet alphabet, std::vector<Symbol> assignment);

    Symbol operator[](VertexId v) const { return assignment[v]; }
    std::size_t size() const { return assignment.size(); }
};

/// Colour string spelled by a vertex sequence under a colouring.
ColorString colour_string_of(const Colouring& phi, std::span<const VertexId> path);

/// Outcome of the exhaustive anagram-free check. Unknown means the path
/// cap was hit before a verdict; the verifier never claims Ok without
/// exhaustive coverage.
struct Verdict {
    enum class Kind { Ok, Counterexample, Unknown };
    Kind kind = Kind::Ok;
    std::vector<VertexId> counterexample;  // simple path spelling an anagram
    std::uint64_t paths_checked = 0;

    bool ok() const { return kind == Kind::Ok; }
};

/// Checks every simple path with an even number of vertices; returns the
/// first anagram path in canonical enumeration order, if any.
/// Throws InvalidInput if phi is not total on g.
Verdict verify_anagram_free(const Graph& g, const Colouring& phi, std::uint64_t cap);

/// Colours the n-vertex path with an abelian-square-free word over at
/// most 4 symbols; a path's simple subpaths are exactly its factors, so
/// the result is anagram-free. Propagates BudgetExceeded from the word
/// generator.
Colouring colour_path_asf(std::uint32_t n, std::uint64_t node_budget = kDefaultAsfBudget);

/// Separator-based divide and conquer on the bag sequence: the middle bag
/// is coloured with a palette unique to the recursion depth (skipping
/// vertices already coloured at shallower depth), then both bag
/// subsequences are handled recursively. Uses at most
/// (width+1) * (floor(log2 bags) + 1) colours.
/// Throws PreconditionViolation if the decomposition is invalid for g.
Colouring dnc_colour(const Graph& g, const PathDecomposition& d);

}  // namespace anagraph
