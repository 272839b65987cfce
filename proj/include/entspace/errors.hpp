#pragma once

#include <stdexcept>
#include <string>

namespace entspace {

/// An iterative routine did not converge, or a computed quantity failed an
/// embedded consistency check.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (non-Hermitian input,
/// spectrum outside the ordered simplex, non-positive state, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace entspace

namespace entspace {

/// Malformed external input (JSON records, CLI arguments).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace entspace
