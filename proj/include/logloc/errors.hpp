#pragma once

#include <stdexcept>
#include <string>

namespace logloc {

/// Input does not have the required shape (bad block layout, mismatched sizes).
struct StructuralError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Value outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A configured size bound was exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Division by an Euler class that vanishes identically.
struct SingularEulerClass : std::domain_error {
    using std::domain_error::domain_error;
};

/// Request that the evaluator does not cover (genus > 0, marked rubber, ...).
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace logloc
