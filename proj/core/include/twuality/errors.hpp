#pragma once

#include <stdexcept>
#include <string>

namespace twuality {

/// Malformed input: out-of-range elements, size mismatches, failed preconditions.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive routine would exceed its configured size cap.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A construction produced a result that failed its own postcondition check.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace twuality
