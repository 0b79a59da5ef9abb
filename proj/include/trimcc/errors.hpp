#pragma once

#include <stdexcept>
#include <string>

namespace trimcc {

// Error taxonomy used across the library.  The CLI maps these to exit codes:
// InputError / PreconditionError / UnsupportedFiberError -> 1,
// ComputationLimitError -> 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input (bad polynomial string, mixed rings,
// unresolved references, non-bihomogeneous ideal where one is required, ...).
class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// A documented operation precondition does not hold (singular source,
// non-trim map passed to a trim-only operation, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// A configured resource cap was exceeded (Groebner step limit, saturation
// iteration cap, generic-slice retry cap, exponent overflow).
class ComputationLimitError : public Error {
public:
    explicit ComputationLimitError(const std::string& msg) : Error(msg) {}
};

// Fiber shape outside the supported classes and no user assertion supplied.
class UnsupportedFiberError : public Error {
public:
    explicit UnsupportedFiberError(const std::string& msg) : Error(msg) {}
};

} // namespace trimcc
