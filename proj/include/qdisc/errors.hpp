#pragma once

#include <stdexcept>

namespace qdisc {

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computation could not be carried out numerically (singular matrix,
/// degenerate spectrum, failed eigensolver).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qdisc
