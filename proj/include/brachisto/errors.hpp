#pragma once

#include <stdexcept>
#include <string>

namespace brachisto {

// incompatible shapes, wrong subsystem count, or an index out of range
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// a numeric precondition failed (omega <= 0, xi outside the path, ...)
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// initial and final states coincide up to a global phase, so the geodesic
// plane (and with it the complement state) is undefined
struct DegeneratePathError : DomainError {
  using DomainError::DomainError;
};

// unsupported experiment configuration (shape/subspace combination, ...)
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// malformed text input; line is 1-based
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line_number)
      : std::runtime_error(what + " (line " + std::to_string(line_number) + ")"),
        line(line_number) {}
  int line;
};

}  // namespace brachisto
