#pragma once

#include <stdexcept>
#include <string>

namespace bgg {

/// Raised when caller-supplied data violates a documented precondition
/// (unsupported root system, malformed weight, mismatched grading).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a computed object contradicts the theory it is built on,
/// e.g. a missing singular vector on a Bruhat edge or a non-proportional
/// square. Always indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace bgg
