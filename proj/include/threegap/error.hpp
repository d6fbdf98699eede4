#pragma once

#include <stdexcept>
#include <string>

namespace threegap {

// Base for all domain errors raised by the library.  what() is always
// "<kind>: <detail>" so callers (and the CLI) can report a stable category.
class Error : public std::runtime_error {
public:
    Error(const std::string& kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(kind) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Malformed input text or an argument outside a documented precondition.
struct InvalidInputError : Error {
    explicit InvalidInputError(const std::string& d) : Error("invalid-input", d) {}
};

// A value is syntactically fine but outside the supported numeric range,
// e.g. alpha not in (0,1).
struct RangeError : Error {
    explicit RangeError(const std::string& d) : Error("out-of-range", d) {}
};

// A finite expansion ran out of digits before the requested index.
struct ExhaustedExpansionError : Error {
    explicit ExhaustedExpansionError(const std::string& d) : Error("exhausted-expansion", d) {}
};

// A surd whose radicand is a perfect square (the value is rational).
struct NotIrrationalError : Error {
    explicit NotIrrationalError(const std::string& d) : Error("not-irrational", d) {}
};

// An exact rational p/q was asked for gap structure at N >= q, where the
// points <k alpha> collide and the three-gap statement degenerates.
struct DegenerateRationalError : Error {
    explicit DegenerateRationalError(const std::string& d) : Error("degenerate-rational", d) {}
};

// An operation that only makes sense for an eventually periodic expansion.
struct RequiresPeriodicError : Error {
    explicit RequiresPeriodicError(const std::string& d) : Error("requires-periodic", d) {}
};

// Closed-form evaluation asked for an index inside the preperiod.
struct ResidualIndexError : Error {
    explicit ResidualIndexError(const std::string& d) : Error("residual-index", d) {}
};

// The sampling precision cannot satisfy the truncation guard.
struct InsufficientPrecisionError : Error {
    explicit InsufficientPrecisionError(const std::string& d) : Error("insufficient-precision", d) {}
};

}  // namespace threegap
