#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tukey {

/// Input violates an operation's precondition (malformed literal, finite
/// set where an infinite one is required, shape mismatch, ...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive search was asked to exceed its configured bound.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A machine (candidate map, continuous map, external process) did not
/// answer within its evaluation budget.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A machine gave an answer contradicting an earlier one or its declared
/// contract (e.g. a decided bit changed under prefix extension).
class MachineFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite prefix was too short to determine the requested value.
class InsufficientPrefix : public std::runtime_error {
 public:
  InsufficientPrefix(const std::string& what, std::size_t required)
      : std::runtime_error(what + " (required depth " + std::to_string(required) + ")"),
        required_(required) {}

  std::size_t required() const noexcept { return required_; }

 private:
  std::size_t required_;
};

}  // namespace tukey
