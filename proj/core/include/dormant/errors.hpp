#pragma once

#include <stdexcept>
#include <string>

namespace dormant {

// Error taxonomy shared by the library and the command line tool.  The CLI
// maps ParameterError (and subclasses) to exit code 2, ResourceLimit to exit
// code 3, and every other Error to exit code 1.

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-contract input (bad prime, bad level, schema violation).
struct ParameterError : Error {
  using Error::Error;
};

// Structurally valid input outside the mathematical domain of an operation.
struct DomainError : ParameterError {
  using ParameterError::ParameterError;
};

// A value that must be a unit mod p^N is divisible by p.
struct NotInvertible : DomainError {
  using DomainError::DomainError;
};

// A configured enumeration or state budget was exceeded.
struct ResourceLimit : Error {
  using Error::Error;
};

// A floating point quantity that must round to an integer is too far from one.
struct RoundingGap : Error {
  using Error::Error;
};

// The character solver could not separate eigenspaces within its retry budget.
struct DegenerateSpectrum : Error {
  using Error::Error;
};

// No candidate period reproduces all samples of a counting function.
struct NoPeriodFits : Error {
  using Error::Error;
};

}  // namespace dormant
