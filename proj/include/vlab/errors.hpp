#pragma once

#include <stdexcept>
#include <string>

namespace vlab {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (CLI exit code 2).
class InputError : public Error {
public:
    using Error::Error;
};

// A computation was asked outside a size guard (CLI exit code 2).
class CapError : public InputError {
public:
    using InputError::InputError;
};

// Well-formed input that violates an operation's precondition (CLI exit code 3).
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace vlab
