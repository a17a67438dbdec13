#pragma once

#include <stdexcept>
#include <string>

namespace seqmetric {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Unknown function name, malformed registry expression, bad label, ...
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The hypothesis of a conditional statement is not met. Distinct from a
/// check that ran and returned false.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A property that holds by construction was violated: always a bug.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace seqmetric
