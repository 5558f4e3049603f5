#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wick {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator index outside 1..d.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments does not hold (non-generator letters,
/// non-hermitian tensor, not a projection, braid relation fails, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured size limit (term count, d^n, bidegree) was exceeded.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

/// A linear system that must be uniquely solvable is singular.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// Expression syntax error; position is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace wick
