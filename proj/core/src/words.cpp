#include "anagraph/words.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace anagraph {

ColorString::ColorString(Alphabet alphabet, std::vector<Symbol> entries)
    : alphabet_(alphabet), entries_(std::move(entries)) {
    if (alphabet_.size < 0) throw InvalidInput("alphabet size must be non-negative");
    for (Symbol s : entries_) {
        if (s < 0 || s >= alphabet_.size)
            throw InvalidInput("symbol " + std::to_string(s) + " outside alphabet of size " +
                               std::to_string(alphabet_.size));
    }
}

bool ParityVector::all_zero() const {
    return std::ranges::all_of(bits, [](std::uint8_t b) { return b == 0; });
}

ParityVector ParityVector::operator^(const ParityVector& other) const {
    if (bits.size() != other.bits.size())
        throw InvalidInput("parity vectors over different alphabets");
    ParityVector out;
    out.bits.resize(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) out.bits[i] = bits[i] ^ other.bits[i];
    return out;
}

std::vector<std::size_t> symbol_counts(const ColorString& s) {
    std::vector<std::size_t> counts(static_cast<std::size_t>(s.alphabet().size), 0);
    for (Symbol a : s.entries()) ++counts[static_cast<std::size_t>(a)];
    return counts;
}

ParityVector parity_vector(const ColorString& s) {
    ParityVector p;
    p.bits.assign(static_cast<std::size_t>(s.alphabet().size), 0);
    for (Symbol a : s.entries()) p.bits[static_cast<std::size_t>(a)] ^= 1;
    return p;
}

bool is_even(const ColorString& s) { return parity_vector(s).all_zero(); }

std::optional<EvenSubstringWitness> find_even_substring(const ColorString& s) {
    if (s.size() % 2 != 0) throw InvalidInput("find_even_substring requires even length");
    const std::size_t pairs = s.size() / 2;

    // Prefix parity of t_j = s[0..2j); equal prefixes bracket an even
    // substring. Scanning j upward finds the smallest end pair first, and
    // the map holds the latest begin candidate seen for each parity.
    std::string parity(static_cast<std::size_t>(s.alphabet().size), '\0');
    std::unordered_map<std::string, std::size_t> seen;
    seen.emplace(parity, 0);
    for (std::size_t j = 1; j <= pairs; ++j) {
        parity[static_cast<std::size_t>(s[2 * j - 2])] ^= 1;
        parity[static_cast<std::size_t>(s[2 * j - 1])] ^= 1;
        auto [it, inserted] = seen.try_emplace(parity, j);
        if (!inserted) return EvenSubstringWitness{it->second, j};
    }
    return std::nullopt;
}

SplitVector split_even_pairs(const ColorString& s) {
    if (s.size() % 2 != 0) throw InvalidInput("split_even_pairs requires even length");
    if (!is_even(s)) throw PreconditionViolation("split_even_pairs requires an even string");

    const std::size_t pairs = s.size() / 2;
    const std::size_t sigma = static_cast<std::size_t>(s.alphabet().size);
    SplitVector out;
    out.bits.assign(pairs, 0);

    // Pair multigraph: node per symbol, edge p joining s[2p] and s[2p+1].
    struct HalfEdge {
        std::size_t edge;
        std::size_t to;
    };
    std::vector<std::vector<HalfEdge>> adj(sigma);
    for (std::size_t p = 0; p < pairs; ++p) {
        const auto u = static_cast<std::size_t>(s[2 * p]);
        const auto v = static_cast<std::size_t>(s[2 * p + 1]);
        adj[u].push_back({p, v});
        if (u != v) adj[v].push_back({p, u});
    }

    // Hierholzer over each component; all degrees are even. An edge
    // consumed while leaving node u is oriented with tail u.
    std::vector<std::uint8_t> used(pairs, 0);
    std::vector<std::size_t> next(sigma, 0);
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < sigma; ++start) {
        if (adj[start].empty()) continue;
        stack.assign(1, start);
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            if (next[u] == adj[u].size()) {
                stack.pop_back();
                continue;
            }
            const HalfEdge he = adj[u][next[u]++];
            if (used[he.edge]) continue;
            used[he.edge] = 1;
            // Tail selection; loops keep bit 0.
            out.bits[he.edge] = (static_cast<std::size_t>(s[2 * he.edge]) == u) ? 0 : 1;
            stack.push_back(he.to);
        }
    }
    return out;
}

std::vector<Symbol> apply_split(const ColorString& s, const SplitVector& v) {
    if (v.bits.size() * 2 != s.size()) throw InvalidInput("split vector does not fit string");
    std::vector<Symbol> out(v.bits.size());
    for (std::size_t p = 0; p < v.bits.size(); ++p) out[p] = s[2 * p + v.bits[p]];
    return out;
}

std::vector<Symbol> apply_split_complement(const ColorString& s, const SplitVector& v) {
    if (v.bits.size() * 2 != s.size()) throw InvalidInput("split vector does not fit string");
    std::vector<Symbol> out(v.bits.size());
    for (std::size_t p = 0; p < v.bits.size(); ++p) out[p] = s[2 * p + 1 - v.bits[p]];
    return out;
}

bool is_anagram(std::span<const Symbol> entries) {
    if (entries.empty() || entries.size() % 2 != 0) return false;
    const std::size_t half = entries.size() / 2;
    std::unordered_map<Symbol, std::ptrdiff_t> balance;
    for (std::size_t i = 0; i < half; ++i) ++balance[entries[i]];
    for (std::size_t i = half; i < entries.size(); ++i) --balance[entries[i]];
    return std::ranges::all_of(balance, [](const auto& kv) { return kv.second == 0; });
}

bool is_anagram(const ColorString& s) { return is_anagram(s.entries()); }

std::optional<AbelianSquare> find_abelian_square(const ColorString& s) {
    const std::size_t n = s.size();
    const std::size_t sigma = static_cast<std::size_t>(s.alphabet().size);
    std::vector<std::ptrdiff_t> diff(sigma, 0);
    for (std::size_t half = 1; 2 * half <= n; ++half) {
        // diff = counts(first half) - counts(second half) for the window
        // starting at `start`; slid one step right with four updates.
        std::fill(diff.begin(), diff.end(), 0);
        std::size_t nonzero = 0;
        auto bump = [&](Symbol a, std::ptrdiff_t d) {
            auto& cell = diff[static_cast<std::size_t>(a)];
            if (cell == 0) ++nonzero;
            cell += d;
            if (cell == 0) --nonzero;
        };
        for (std::size_t i = 0; i < half; ++i) bump(s[i], +1);
        for (std::size_t i = half; i < 2 * half; ++i) bump(s[i], -1);
        for (std::size_t start = 0;; ++start) {
            if (nonzero == 0) return AbelianSquare{start, half};
            if (start + 2 * half >= n) break;
            bump(s[start], -1);
            bump(s[start + half], +2);
            bump(s[start + 2 * half], -1);
        }
    }
    return std::nullopt;
}

namespace {

// Backtracking state for abelian-square-free word search. For each centre c
// (start of a candidate second half) we keep the count difference between
// the halves of the factor of maximal even length ending at the current
// position, plus how many symbols are out of balance. Appending a symbol
// touches each live centre once; a balance count of zero flags a square.
class AsfSearch {
public:
    AsfSearch(std::size_t length, std::int32_t sigma, std::uint64_t budget)
        : target_(length),
          sigma_(static_cast<std::size_t>(sigma)),
          budget_(budget),
          diff_(length, std::vector<std::int32_t>(static_cast<std::size_t>(sigma), 0)),
          unbalanced_(length, 0) {
        word_.reserve(length);
    }

    // Depth-first, smallest symbol first. Returns true once word_ holds a
    // word of the target length.
    bool run() { return target_ == 0 || extend(); }

    std::vector<Symbol> take_word() { return std::move(word_); }

private:
    bool extend() {
        for (Symbol a = 0; a < static_cast<Symbol>(sigma_); ++a) {
            if (budget_ == 0) throw BudgetExceeded(budget_start_);
            --budget_;
            if (append(a)) {
                if (word_.size() == target_ || extend()) return true;
                undo();
            }
        }
        return false;
    }

    // Appends symbol a unless that completes an abelian square; keeps the
    // centre tables consistent either way.
    bool append(Symbol a) {
        const std::size_t pos = word_.size();
        word_.push_back(a);
        bool square = false;
        // Factor for centre c now spans [2c-pos-1, pos]; its first half
        // gained word[2c-pos-1], its second half gained word[pos].
        for (std::size_t c = (pos + 2) / 2; c <= pos; ++c) {
            auto& d = diff_[c];
            auto& nz = unbalanced_[c];
            const Symbol left = word_[2 * c - pos - 1];
            if (d[static_cast<std::size_t>(left)]++ == 0) ++nz;
            if (d[static_cast<std::size_t>(left)] == 0) --nz;
            if (d[static_cast<std::size_t>(a)]-- == 0) ++nz;
            if (d[static_cast<std::size_t>(a)] == 0) --nz;
            if (nz == 0) square = true;
        }
        if (square) undo();
        return !square;
    }

    void undo() {
        const std::size_t pos = word_.size() - 1;
        const Symbol a = word_[pos];
        for (std::size_t c = (pos + 2) / 2; c <= pos; ++c) {
            auto& d = diff_[c];
            auto& nz = unbalanced_[c];
            const Symbol left = word_[2 * c - pos - 1];
            if (d[static_cast<std::size_t>(left)]-- == 0) ++nz;
            if (d[static_cast<std::size_t>(left)] == 0) --nz;
            if (d[static_cast<std::size_t>(a)]++ == 0) ++nz;
            if (d[static_cast<std::size_t>(a)] == 0) --nz;
        }
        word_.pop_back();
    }

    std::size_t target_;
    std::size_t sigma_;
    std::uint64_t budget_;
    std::uint64_t budget_start_ = budget_;
    std::vector<Symbol> word_;
    std::vector<std::vector<std::int32_t>> diff_;
    std::vector<std::int32_t> unbalanced_;
};

}  // namespace

std::optional<ColorString> generate_asf_word(std::size_t length, std::int32_t alphabet_size,
                                             std::uint64_t node_budget) {
    if (length == 0) throw InvalidInput("word length must be positive");
    if (alphabet_size <= 0) throw InvalidInput("alphabet size must be positive");
    AsfSearch search(length, alphabet_size, node_budget);
    if (!search.run()) return std::nullopt;
    return ColorString(Alphabet{alphabet_size}, search.take_word());
}

}  // namespace anagraph
