#pragma once

#include <stdexcept>
#include <string>

namespace smw {

/// Malformed or out-of-contract input: unknown vertex ids, non-edges,
/// disconnected graphs where connectivity is required, parse failures.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// An exhaustive oracle declined an instance above its configured size limit.
class Refused : public std::runtime_error {
 public:
  explicit Refused(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace smw
