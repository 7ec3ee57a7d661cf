#pragma once

#include <stdexcept>
#include <string>

namespace gqg {

// All recoverable failures (bad input, violated precondition, table overflow)
// surface as gqg::Error with a human-readable message.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Internal-consistency failures: two routes that must agree disagreed.
// The CLI maps these to a distinct exit code.
struct ConsistencyError : Error {
    explicit ConsistencyError(const std::string& what) : Error(what) {}
};

} // namespace gqg
