#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace anagraph {

/// Malformed arguments: out-of-range symbols, odd-length input where an
/// even length is required, mismatched graph/colouring sizes, bad JSON.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold (e.g. a
/// non-even string passed to the pair splitter).
struct PreconditionViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// A bounded search ran out of its node budget before reaching a verdict.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(std::uint64_t budget)
        : std::runtime_error("search budget of " + std::to_string(budget) + " nodes exceeded"),
          budget(budget) {}
    std::uint64_t budget;
};

/// An enumeration produced more items than the caller's cap allows.
struct EnumerationOverflow : std::runtime_error {
    explicit EnumerationOverflow(std::uint64_t cap)
        : std::runtime_error("enumeration exceeded cap of " + std::to_string(cap) + " items"),
          cap(cap) {}
    std::uint64_t cap;
};

}  // namespace anagraph
