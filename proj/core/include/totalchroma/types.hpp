#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace totalchroma {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;
/// Colors are 1-based. Zero is the storage sentinel for "uncolored" and never
/// appears in a public result.
using Color = std::int32_t;

inline constexpr Color kUncolored = 0;
inline constexpr EdgeId kNoEdge = -1;
inline constexpr Vertex kNoVertex = -1;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `line` is 1-based, 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Requested parameters admit no solution (e.g. odd degree sum).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// A state the algorithms guarantee can never be reached was reached. Carries
/// whatever diagnostic text the thrower could assemble.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace totalchroma
