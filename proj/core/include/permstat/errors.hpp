#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permstat {

/// A precondition or domain guard was violated (n too small, bad pair
/// indices, a partition with parts too small for a constraint probability, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Malformed text input: partitions, permutations, constraints, rationals.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration would visit more elements than allowed.
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(const std::string& what, std::string required)
      : std::runtime_error(what), required_(std::move(required)) {}

  /// Number of elements the refused enumeration would have visited.
  const std::string& required() const noexcept { return required_; }

private:
  std::string required_;
};

}  // namespace permstat
