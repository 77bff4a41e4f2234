#pragma once

#include <stdexcept>
#include <string>

namespace mtfde {

// Invalid argument / violated precondition (maps to CLI exit code 2).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Iteration did not converge (maps to CLI exit code 3).
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A verification invariant failed (maps to CLI exit code 4).
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mtfde
