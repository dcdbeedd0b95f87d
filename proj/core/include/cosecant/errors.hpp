#pragma once

#include <stdexcept>
#include <string>

namespace cosecant {

/// An argument lies outside the mathematical domain of an operation
/// (e.g. j > k for a Stirling number, v < 2 for c_{2v,v-1}).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series specification cannot produce the requested coefficient.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed serialized input ("num/den" strings, JSON rows).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cosecant
