#pragma once

#include <stdexcept>
#include <string>

namespace crooked {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different coordinate charts.
class ChartMismatch : public Error {
public:
    using Error::Error;
};

/// An argument violates an operation's precondition (wrong causal type,
/// point outside a halfspace, degenerate input, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed scene record, expression or command-line value.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace crooked
