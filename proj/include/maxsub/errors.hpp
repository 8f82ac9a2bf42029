#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxsub {

/// Raised when an operation is called outside its contract (e.g. a set that
/// is not a solution, or an empty set where a source is required).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// choose() found no candidate: X^+_A is empty.
class NoCandidateError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Exhaustive routines refuse inputs above their configured guard.
class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed lines that contradict each other (duplicate edge, black/white clash).
class FormatError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace maxsub
