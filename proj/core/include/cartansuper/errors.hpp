#pragma once

#include <stdexcept>
#include <string>

namespace cartansuper {

/// Caller violated a precondition (bad shape, modulus mismatch, ...).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Inversion of zero in F_p.
struct DivisionByZeroError : UsageError {
    DivisionByZeroError() : UsageError("division by zero in F_p") {}
};

/// A model exceeded the configured dimension guard.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An invariant the construction guarantees was observed to fail.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace cartansuper
