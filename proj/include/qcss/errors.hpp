#pragma once

#include <stdexcept>
#include <string>

namespace qcss {

/// Malformed arguments: length mismatches, out-of-range indices, bad text.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction or operation was called outside its mathematical preconditions.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An enumeration would exceed the configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity failed; indicates a bug or an inconsistent input.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qcss
