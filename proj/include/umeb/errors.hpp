#pragma once

#include <stdexcept>
#include <string>

namespace umeb {

/// Thrown when a caller violates an operation's precondition (bad dimensions,
/// out-of-range indices, non-Hermitian input, ...).
class ContractViolation : public std::invalid_argument {
 public:
  explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when an iterative kernel fails to produce a trustworthy result.
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace umeb
