#pragma once

#include <stdexcept>
#include <string>

namespace diffspec {

/// Bad caller input: non-prime p, reducible modulus, malformed table, ...
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Zero has no inverse.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A brute-force routine was asked to run above its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact division that must be exact was not. Always a bug, never rounding.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace diffspec
