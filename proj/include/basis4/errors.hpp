#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace basis4 {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed scalar literal, vector literal, or hypergraph document.
/// `position` is the byte offset of the offending character within the
/// token or document being parsed.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// Violated value-level precondition: dependent spans, non-orthogonal
/// inputs, division by zero, negative radicand, mismatched modes.
struct DomainError : Error {
    using Error::Error;
};

/// factorize() was given a vector with z1*z4 - z2*z3 != 0.
struct NotDecomposableError : DomainError {
    NotDecomposableError(const std::string& what, std::string residual)
        : DomainError(what), residual(std::move(residual)) {}
    std::string residual;  // exact literal of z1*z4 - z2*z3
};

}  // namespace basis4
