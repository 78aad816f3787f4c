#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph operation would exceed the 128-vertex order cap.
class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed graph6 input. `offset` is the byte position of the problem.
class Graph6Error : public Error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A pattern handed to the containment engine is not a tree.
class NotATree : public Error {
 public:
  using Error::Error;
};

/// Invalid construction or query parameters (family order too small, etc.).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A closed-form query outside the range where the formula is stated.
class FormulaDomainError : public Error {
 public:
  using Error::Error;
};

/// A constructed witness failed its own freeness checks.
class WitnessVerificationFailed : public Error {
 public:
  using Error::Error;
};

/// Two rules disagree, or a proved bound contradicts a stated value.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// An oracle search hit its order cap or wall-clock budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace trt
