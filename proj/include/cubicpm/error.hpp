#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubicpm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 or edge-list input. `offset()` is the byte offset
/// (graph6) or the 1-based line number (edge list) of the first problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An operation was called on input violating its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search was refused because the instance exceeds the
/// configured size cap, or a search budget (PM count, deadline) ran out.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A step that a theorem guarantees to succeed did not. Either the input
/// is invalid in a way the preconditions did not catch, or there is a bug.
class ProofStepViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace cubicpm
