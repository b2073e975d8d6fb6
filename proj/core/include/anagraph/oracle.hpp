#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "anagraph/adversary.hpp"
#include "anagraph/colouring.hpp"
#include "anagraph/graphs.hpp"
#include "anagraph/words.hpp"

namespace anagraph {

// Reference implementations: deliberately naive, structured differently
// from the production code they certify, and fast enough only for the
// small instances used in tests and ground-truth tables.

/// First anagram path found by a plain directed depth-first walk from
/// every start vertex (no canonicalization), anagram test by sorting the
/// two halves. Each visited path costs one unit of work; throws
/// EnumerationOverflow past work_cap.
std::optional<std::vector<VertexId>> brute_find_anagram_path(const Graph& g, const Colouring& phi,
                                                             std::uint64_t work_cap);

/// Number of directed simple walks with >= 2 vertices. Exactly twice the
/// canonical path count. Throws EnumerationOverflow past work_cap.
std::uint64_t brute_count_directed_paths(const Graph& g, std::uint64_t work_cap);

struct MinColoursResult {
    std::int32_t colours = 0;
    Colouring witness;  // first anagram-free colouring found at that count
};

/// Smallest c <= max_colours admitting an anagram-free c-colouring, or
/// nullopt when every such c fails. Enumerates restricted-growth colour
/// assignments with exactly c classes (vertex 0 takes colour 0, each new
/// colour introduced in order) and tests each with
/// brute_find_anagram_path. Colouring candidates and visited paths share
/// one work counter; throws EnumerationOverflow past work_cap.
std::optional<MinColoursResult> brute_min_afcn(const Graph& g, std::int32_t max_colours,
                                               std::uint64_t work_cap);

/// Lexicographically first valid pair split (pair 0 is the most
/// significant bit), by trying all 2^r selections in order; nullopt when
/// no selection balances the counts (never the case for an even string).
/// Matches the contract of split_even_pairs, not its output.
/// Throws InvalidInput for odd length or more than 25 pairs,
/// PreconditionViolation if some symbol count is odd.
std::optional<SplitVector> brute_split(const ColorString& s);

/// Exhaustive search over all symbol-to-set placements, symbols in
/// ascending order, candidate sets in input order. Agrees with
/// solve_capacitated_assignment on feasibility.
std::optional<Assignment> brute_assignment(const ColourSets& sets, std::size_t capacity);

struct AsfMaxResult {
    std::size_t max_length = 0;
    std::vector<Symbol> longest;  // lexicographically first witness
};

/// Longest abelian-square-free word over the alphabet, by exhaustive
/// depth-first extension with a from-scratch sorted-halves factor check
/// at every step. The budget is spent in units proportional to factor
/// comparisons, so the quadratic cost of deep words is accounted for.
/// Finite only for alphabets of size <= 3 (a budget of 10^5 units covers
/// them); larger alphabets exhaust any budget (BudgetExceeded).
AsfMaxResult brute_asf_max(std::int32_t alphabet_size, std::uint64_t work_budget);

}  // namespace anagraph
