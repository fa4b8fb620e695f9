#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hamstar {

// Precondition on an argument violated (bad k, bad t, vertex out of range).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Graph too large for the fixed-width rows or for exact search.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed graph6 input. `offset` is the zero-based byte offset of the
// offending byte within the line; `line` is 1-based when known, else 0.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& reason, std::size_t offset, std::size_t line = 0)
      : std::runtime_error((line ? "line " + std::to_string(line) + ": " : std::string()) +
                           reason + " at byte " + std::to_string(offset)),
        reason_(reason),
        offset_(offset),
        line_(line) {}

  const std::string& reason() const noexcept { return reason_; }
  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string reason_;
  std::size_t offset_;
  std::size_t line_;
};

// A check was invoked on a graph outside the regime where the statement it
// checks applies. Callers count these instead of treating them as failures.
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The object handed in does not have the shape the operation needs
// (e.g. fewer than two vertices off the cycle).
class StructureError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The witness search ran out of candidates.
class ExtractionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hamstar
