// Error taxonomy shared across the library. The CLI maps these to exit codes:
// precondition -> 2, resource -> 3, verification -> 4.
#pragma once

#include <stdexcept>
#include <string>

namespace skein {

// A documented precondition does not hold (e.g. diagram not adequate).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// The computation would exceed the configured resource budget.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// A checked identity failed to hold.
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace skein
