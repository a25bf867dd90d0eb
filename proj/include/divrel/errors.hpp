#pragma once

#include <stdexcept>
#include <string>

namespace divrel {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or contract-violating input (bad documents, mismatched
// variable sets, duplicate generators, invalid relation indices, ...).
struct InputError : Error {
    explicit InputError(const std::string& what) : Error(what) {}
};

// A configurable resource cap was exceeded (subset enumeration, closure
// element count, lattice size, face count).
struct CapError : Error {
    explicit CapError(const std::string& what) : Error(what) {}
};

} // namespace divrel
