#pragma once

#include <stdexcept>
#include <string>

namespace gbu {

// Malformed or unsupported input. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A self-check failed. Indicates a bug, not bad input. Maps to exit code 3.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gbu
