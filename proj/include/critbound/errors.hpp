#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace critbound {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a byte offset (graph6) or a
/// 1-based line number (edge lists, streams); `kind` says which.
class ParseError : public Error {
 public:
  enum class Kind { ByteOffset, Line };

  ParseError(const std::string& what, Kind kind, std::size_t position)
      : Error(what), kind_(kind), position_(position) {}

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A decision procedure hit its explicit state/size budget. Never
/// converted into a verdict.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check that the mathematics guarantees has
/// failed. Always fatal.
class CorrectnessFinding : public Error {
 public:
  using Error::Error;
};

}  // namespace critbound
