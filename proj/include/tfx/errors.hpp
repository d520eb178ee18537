#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace tfx {

/// Bad argument: out-of-range vertex, invalid construction parameters, ...
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed input text (graph6 and friends). Carries the byte offset of
/// the first offending byte.
struct ParseError : std::invalid_argument {
    ParseError(const std::string& msg, std::size_t offset)
        : std::invalid_argument(msg + " (byte " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
    std::size_t byte_offset;
};

/// Instance exceeds a declared solver/enumeration ceiling. Exhaustive work
/// at the ceiling is a normal operating mode, so callers are expected to
/// catch this and report partial results. `best_known` carries an upper
/// bound when the solver had one in hand.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg,
                           std::optional<long long> best = std::nullopt)
        : std::runtime_error(msg), best_known(best) {}
    std::optional<long long> best_known;
};

/// A stated precondition of a lemma procedure does not hold for the input.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Reaching this means a proven statement failed on a concrete input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace tfx
