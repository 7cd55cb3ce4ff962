#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace khc {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or problem-file text.  `position` is a byte offset
/// into the parsed string, `line` is 1-based when known (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position, std::size_t line = 0)
      : Error(what), position_(position), line_(line) {}

  std::size_t position() const { return position_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t position_;
  std::size_t line_;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different rings") {}
  explicit RingMismatch(const std::string& what) : Error(what) {}
};

class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when an internal consistency check fails (d∘d ≠ 0, a lift that
/// must exist does not, ...).  Seeing one indicates a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace khc
