#pragma once

#include <stdexcept>
#include <string>

namespace fbct {

// Caller passed something the operation cannot accept (bad degree, foreign
// field element, malformed function description).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Input is valid but the requested computation exceeds a size guardrail.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// An exact-arithmetic step produced a non-integer or otherwise impossible
// intermediate. Always an implementation bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fbct
