#pragma once

#include <stdexcept>
#include <string>

namespace uavcov {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad user input: unreadable files, malformed JSON/CSV, invalid scenarios.
class InputError : public Error {
public:
    using Error::Error;
};

/// A method was asked to run on a scenario it does not support (e.g. HoRR on
/// a heterogeneous scenario).
class MethodMismatch : public Error {
public:
    using Error::Error;
};

/// An exhaustive search was asked to run beyond its size guard.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

/// Event stream violates ordering or per-UAV alternation. Distinct from an
/// infeasible (but well-formed) schedule.
class MalformedSchedule : public InputError {
public:
    using InputError::InputError;
};

/// Internal consistency check failed; indicates a bug or a degenerate input.
class DiagnosticError : public Error {
public:
    using Error::Error;
};

}  // namespace uavcov
