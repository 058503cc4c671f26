#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gg {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape mismatch between operands (matrix dims, boundary widths).
struct DimensionError : Error {
    using Error::Error;
};

// An entry would exceed the representable cap.
struct OverflowError : Error {
    using Error::Error;
};

// Text input could not be parsed; pos is a 0-based byte offset.
struct ParseError : Error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t at) : Error(msg), pos(at) {}
};

// Well-formed input with an impossible type (e.g. diagram width mismatch).
struct TypeError : Error {
    using Error::Error;
};

// Semantically invalid input (bad config values, wrong JSON shape).
struct InputError : Error {
    using Error::Error;
};

// A configured resource bound was exceeded (perm bound, profile guard, budgets).
struct BoundError : Error {
    using Error::Error;
};

} // namespace gg
