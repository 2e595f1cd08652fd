#pragma once

#include <stdexcept>
#include <string>

namespace epsm {

// Precondition violated by the caller (bad length, mismatched configs, ...).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Something outside the caller's arguments went wrong (unreadable file, ...).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace epsm
