#pragma once

#include <stdexcept>
#include <string>

namespace dynforms {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands live in different fields (e.g. prime fields with distinct moduli).
struct FieldMismatchError : Error {
    explicit FieldMismatchError(const std::string& msg) : Error(msg) {}
};

// Caller violated a documented precondition.
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// A rational map construction lost degree (vanishing resultant).
struct DegenerateMapError : Error {
    explicit DegenerateMapError(const std::string& msg) : Error(msg) {}
};

// A configured resource cap (term count, iteration budget) was exceeded.
struct ResourceCapError : Error {
    explicit ResourceCapError(const std::string& msg) : Error(msg) {}
};

// An identity that is guaranteed by a proved theorem failed to hold.
// Reaching this means the build itself is wrong, so the CLI maps it to
// a dedicated exit code.
struct TheoremCheckError : Error {
    explicit TheoremCheckError(const std::string& msg) : Error(msg) {}
};

}  // namespace dynforms
