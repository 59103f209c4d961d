#pragma once

#include <stdexcept>

namespace bihamil {

/// Malformed or inconsistent user input (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an analysis does not hold (exit code 3).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations disagree, e.g. a dimension checksum (exit code 4).
class InternalInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bihamil
