#pragma once

// Error hierarchy. Every message names the violated invariant or the
// offending input; the CLI maps the three categories to exit codes.

#include <stdexcept>
#include <string>

namespace secta {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed, inconsistent or unsupported input (CLI exit code 3).
struct InputError : Error {
    using Error::Error;
};

// An internal consistency assertion failed.  This signals a convention or
// construction bug, never a legitimate input state (CLI exit code 2).
struct InvariantError : Error {
    using Error::Error;
};

// An enumeration would exceed the configured work budget (CLI exit code 4).
struct BudgetError : Error {
    using Error::Error;
};

}  // namespace secta
