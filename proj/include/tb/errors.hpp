#pragma once

#include <stdexcept>
#include <string>

namespace tb {

/// Malformed graph text (header, edge lines, counts).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that violates a documented precondition: loops, duplicate edges,
/// labels out of range, invalid generator parameters.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exponential routine was asked to run on an instance beyond its limit.
class GuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A result that is impossible if the library is correct (for example a
/// q0 search running past its proven bound).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tb
