#pragma once

#include <stdexcept>
#include <string>

namespace invpat {

// Raised for malformed text, out-of-range sizes and values that violate a
// type invariant (e.g. a non-involution handed to an involution API).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an element or pattern is not admissible for the requested
// containment mode (F mode with fixed points, I mode with a non-involution).
class ModeMismatch : public std::invalid_argument {
 public:
  explicit ModeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace invpat
