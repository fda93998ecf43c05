#pragma once

#include <stdexcept>
#include <string>

namespace diffsys {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Values from different basis contexts were mixed.
struct ContextError : Error {
    using Error::Error;
};

/// A lattice operation's precondition failed (non-member point, rank mismatch, ...).
struct LatticeError : Error {
    using Error::Error;
};

/// The requested result leaves the representable function classes.
struct RepresentabilityError : Error {
    using Error::Error;
};

/// A configured resource budget (order cap, S-pair budget, enumeration cap) was hit.
struct ResourceError : Error {
    using Error::Error;
};

/// Exact evaluation is not defined for the given point.
struct EvalError : Error {
    using Error::Error;
};

/// DSL syntax or name resolution failure, with 1-based source location.
struct ParseError : Error {
    int line;
    int col;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
          line(line_), col(col_) {}
};

} // namespace diffsys
