#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "anagraph/errors.hpp"

namespace anagraph {

/// Colour symbols are dense integers 0..size-1. Any external naming is
/// resolved at the I/O boundary.
using Symbol = std::int32_t;

struct Alphabet {
    std::int32_t size = 0;
};

/// A finite sequence of colour symbols over an explicit alphabet.
class ColorString {
public:
    ColorString() = default;

    /// Throws InvalidInput if any entry falls outside the alphabet.
    ColorString(Alphabet alphabet, std::vector<Symbol> entries);

    const Alphabet& alphabet() const { return alphabet_; }
    std::span<const Symbol> entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    Symbol operator[](std::size_t i) const { return entries_[i]; }

private:
    Alphabet alphabet_;
    std::vector<Symbol> entries_;
};

/// Per-symbol occurrence counts modulo 2. Concatenating strings xors
/// their parity vectors.
struct ParityVector {
    std::vector<std::uint8_t> bits;  // one bit per alphabet symbol

    bool all_zero() const;
    ParityVector operator^(const ParityVector& other) const;
    bool operator==(const ParityVector& other) const = default;
};

/// A pair-aligned even substring of a string of 2n entries: entry
/// positions [2*begin_pair, 2*end_pair) with 0 <= begin_pair < end_pair <= n.
struct EvenSubstringWitness {
    std::size_t begin_pair = 0;
    std::size_t end_pair = 0;
};

/// One bit per consecutive pair of a string of length 2r; bit b for pair p
/// selects entry 2p+b. The selected subsequence carries exactly half of
/// every symbol's occurrences.
struct SplitVector {
    std::vector<std::uint8_t> bits;
};

std::vector<std::size_t> symbol_counts(const ColorString& s);

ParityVector parity_vector(const ColorString& s);

/// True iff every symbol occurs an even number of times (vacuously true
/// for the empty string).
bool is_even(const ColorString& s);

/// Finds a pair-aligned even substring of an even-length string, or
/// nullopt when none exists. Deterministic: the witness with the smallest
/// end_pair is returned (ties by largest begin_pair cannot arise).
///
/// A witness always exists when 2^alphabet_size < n+1, by pigeonhole over
/// the n+1 pair-aligned prefix parity vectors.
///
/// Throws InvalidInput on odd-length input.
std::optional<EvenSubstringWitness> find_even_substring(const ColorString& s);

/// Splits an even string of length 2r into consecutive pairs and selects
/// one entry per pair so that the selection carries exactly half of every
/// symbol's occurrences.
///
/// Works on the pair multigraph over the alphabet (one edge per pair,
/// loops allowed): evenness makes every degree even, so each component
/// has an Eulerian circuit; orienting edges along the circuit and picking
/// each edge's tail selects each symbol exactly deg/2 = n_a/2 times.
/// Pairs of two equal symbols always get bit 0.
///
/// Throws InvalidInput on odd length, PreconditionViolation if the string
/// is not even.
SplitVector split_even_pairs(const ColorString& s);

/// Applies a split vector: selected entries (bit side) and the rejected
/// complement, in pair order.
std::vector<Symbol> apply_split(const ColorString& s, const SplitVector& v);
std::vector<Symbol> apply_split_complement(const ColorString& s, const SplitVector& v);

/// True iff the string has positive even length and the multiset of its
/// first half equals the multiset of its second half.
bool is_anagram(const ColorString& s);
bool is_anagram(std::span<const Symbol> entries);

/// A contiguous anagram factor: entries [start, start + 2*half_length).
struct AbelianSquare {
    std::size_t start = 0;
    std::size_t half_length = 0;
};

/// Quadratic scan for the first abelian square, ordered by half length
/// then by start position. Returns nullopt for abelian-square-free input.
std::optional<AbelianSquare> find_abelian_square(const ColorString& s);

inline constexpr std::uint64_t kDefaultAsfBudget = 10'000'000;

/// Depth-first backtracking search for an abelian-square-free word of the
/// requested length, trying smaller symbols first. Returns nullopt when
/// the exhausted search proves no such word exists. Abelian squares are
/// rejected incrementally via per-centre count-difference tables.
///
/// Throws InvalidInput if length or alphabet_size is not positive,
/// BudgetExceeded if the node budget runs out first.
std::optional<ColorString> generate_asf_word(std::size_t length, std::int32_t alphabet_size,
                                             std::uint64_t node_budget = kDefaultAsfBudget);

}  // namespace anagraph
