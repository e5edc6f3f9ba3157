#pragma once

#include <stdexcept>
#include <string>

namespace goldman {

// Base for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input: wrong rank, non-hyperbolic matrix where one is required, etc.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A built-in surface family could not be constructed at the requested
// parameters (certificate failure, overlapping Schottky circles, ...).
struct ConstructionError : DomainError {
    explicit ConstructionError(const std::string& msg) : DomainError(msg) {}
};

// Intersection enumeration did not stabilize at the configured depth.
struct UnstableEnumeration : Error {
    explicit UnstableEnumeration(const std::string& msg) : Error(msg) {}
};

}  // namespace goldman
