#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psdthrottle {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid family parameters or out-of-range arguments.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A configured search or state-space limit would be exceeded.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Edge is absent from the graph (or malformed).
class EdgeError : public Error {
 public:
  using Error::Error;
};

// Radius-based quantity requested on a disconnected graph.
class DisconnectedError : public Error {
 public:
  using Error::Error;
};

// Operation called outside its precondition (stalled trace, untagged product, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The requested parameter has no admissible k (e.g. th*_+ of a 1-vertex graph).
class UndefinedParameterError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace psdthrottle
