#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anagraph/colouring.hpp"
#include "anagraph/graphs.hpp"
#include "anagraph/words.hpp"

namespace anagraph {

/// A sequence of colour sets, one per clique of an interval.
using ColourSets = std::vector<std::vector<Symbol>>;

/// Mapping from symbols to set indices, each index receiving at most
/// `capacity` symbols and each symbol going to a set that contains it.
struct Assignment {
    std::map<Symbol, std::size_t> index_of;
    std::size_t capacity = 0;
};

/// An interval of clique indices (0-based, inclusive) with per-clique
/// colour subsets in which every symbol occurs an even number of times
/// and every subset keeps at least 2 colours.
struct IntervalWitness {
    std::size_t first = 0;
    std::size_t last = 0;
    std::vector<std::vector<Symbol>> subsets;  // aligned to first..last
};

/// Red/blue labelling of vertex subsets: exactly half of all vertices red,
/// at least one of each label per subset.
struct RedBlueLabelling {
    std::vector<std::vector<VertexId>> red;
    std::vector<std::vector<VertexId>> blue;
};

/// A simple path whose colour string is an anagram, with the split
/// certificate that produced the half-multiset equality.
struct AnagramPath {
    std::vector<VertexId> vertices;
    std::vector<Symbol> colours;
    SplitVector split;
    std::optional<std::pair<std::size_t, std::size_t>> interval;  // columns/cliques spanned
    std::string source;  // which witness produced it
};

/// Independent re-validation of an adversary output: simplicity, edge
/// adjacency, colour fidelity and the anagram property.
struct PathCheck {
    bool simple = false;
    bool adjacent = false;
    bool colours_match = false;
    bool anagram = false;

    bool ok() const { return simple && adjacent && colours_match && anagram; }
};

PathCheck check_anagram_path(const Graph& g, const Colouring& phi, const AnagramPath& p);

/// Ladder adversary: read the colouring column by column as a string,
/// locate a pair-aligned even substring, split its pairs, and walk the
/// chosen side out and the complement back. Returns a path whenever the
/// even substring exists; guaranteed when 2^|alphabet| < n+1.
/// Throws InvalidInput if phi does not colour the 2n-vertex ladder.
std::optional<AnagramPath> find_anagram_ladder(std::uint32_t n, const Colouring& phi);

/// Exact decision: assign every symbol occurring in `sets` to a set that
/// contains it, no set taking more than `capacity` symbols. Starts from a
/// greedy assignment and relieves overloaded sets along augmenting paths;
/// infeasibility is certified by an exhausted augmentation.
std::optional<Assignment> solve_capacitated_assignment(const ColourSets& sets,
                                                       std::size_t capacity);

/// Scans intervals by increasing length, then increasing start. For each,
/// routes the odd-count symbols to removal slots (capacity k-2) and, on
/// success, removes each from its assigned set. Succeeds whenever
/// |alphabet| < (k-2) * log2(n/3).
/// Throws PreconditionViolation unless every set has size exactly k >= 3.
std::optional<IntervalWitness> find_even_interval(const ColourSets& sets, std::uint32_t k);

/// Splits subsets into half red / half blue: even-size subsets exactly in
/// half (lowest ids red); odd-size subsets alternate between ceil and
/// floor of half red, in subsequence order.
/// Throws InvalidInput unless every subset has size >= 2 and the total
/// size is even.
RedBlueLabelling red_blue_label(const std::vector<std::vector<VertexId>>& subsets);

/// Pairs each red vertex with a blue one: within subsets where possible,
/// leftover vertices of odd subsets (alternating red/blue) paired
/// consecutively across subsets. Pair order: within-subset pairs in
/// subset order, then the leftover pairs.
std::vector<std::pair<VertexId, VertexId>> bichromatic_matching(const RedBlueLabelling& l);

/// Chain adversary: duplicate-colour edges short-circuit to a 2-vertex
/// path; otherwise the clique colour sets feed find_even_interval, the
/// witness subsets are labelled and matched, and the split of the matched
/// pair string picks which half of each pair walks out and which walks
/// back. Succeeds whenever |alphabet| < (k-2) * log2(n/3).
/// Throws InvalidInput if phi does not colour the kn-vertex chain.
std::optional<AnagramPath> find_anagram_clique_chain(std::uint32_t n, std::uint32_t k,
                                                     const Colouring& phi);

}  // namespace anagraph
