#pragma once

#include <stdexcept>
#include <string>

namespace fdsum {

// Domain preconditions, named after the condition they enforce.
// All derive from std::domain_error so callers can catch broadly.

struct NotCoprimeError : std::domain_error {
  explicit NotCoprimeError(const std::string& what) : std::domain_error(what) {}
};

struct NotPairwiseCoprimeError : std::domain_error {
  explicit NotPairwiseCoprimeError(const std::string& what) : std::domain_error(what) {}
};

struct PeriodMismatchError : std::domain_error {
  explicit PeriodMismatchError(const std::string& what) : std::domain_error(what) {}
};

struct NotZeroMeanError : std::domain_error {
  explicit NotZeroMeanError(const std::string& what) : std::domain_error(what) {}
};

struct NotPrimeError : std::domain_error {
  explicit NotPrimeError(const std::string& what) : std::domain_error(what) {}
};

struct BTooSmallError : std::domain_error {
  explicit BTooSmallError(const std::string& what) : std::domain_error(what) {}
};

// Raised when an expression that must produce an integer does not.
// Reaching it means the implementation is wrong, not the input.
struct NonIntegerResultError : std::logic_error {
  explicit NonIntegerResultError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fdsum
