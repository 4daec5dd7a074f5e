#pragma once

#include <stdexcept>
#include <string>

namespace qlift {

// Bad user input: mismatched groups, malformed datum files, invalid indices.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured size budget was exceeded (basis too large, degree cap too small).
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical property that the construction relies on failed to hold
// (non-confluent rewriting, missing antipode, cocycle law violation).
struct MathError : std::runtime_error {
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qlift
