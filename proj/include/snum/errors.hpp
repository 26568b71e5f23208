#pragma once

#include <stdexcept>
#include <string>

namespace snum {

// Bad user input: shape mismatch, malformed file, parameter out of range.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// The request is valid but outside the tool's exact/enumerable catalog
// (e.g. extreme points of a Euclidean ball, enumeration cap exceeded).
struct CapabilityError : std::runtime_error {
    explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative kernel failed to converge or a certificate check failed.
struct NumericalFailure : std::runtime_error {
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

// Two certified bounds contradict each other. Either an implementation bug
// or a genuine counterexample to a verified inequality; suites treat it as
// a hard failure.
struct CertifiedViolation : std::runtime_error {
    explicit CertifiedViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace snum
