#pragma once

#include <stdexcept>
#include <string>

namespace tangles {

/// Malformed input files, inconsistent matrices, incomplete tables.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive algorithm was asked to run above the element cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (non-nested seed, etc.).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tangles
