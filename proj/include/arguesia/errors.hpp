#pragma once

#include <stdexcept>
#include <string>

namespace arguesia {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, JSON configs, CLI values).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic outside the domain of an operation: division by zero,
/// square root of a negative rational, mixed radicands.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A geometric precondition failed: coincident points, a center on the
/// line it projects from, a non-generic transversal. The message names the
/// first incidence that broke.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

}  // namespace arguesia
