#ifndef DLSTAR_ERRORS_HPP
#define DLSTAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dlstar {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that is not a bijection, has a point out of range, or has the wrong degree.
class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class PointOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotSolvable : public Error {
 public:
  using Error::Error;
};

class NotInGroup : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class IndexCapExceeded : public Error {
 public:
  using Error::Error;
};

class DegreeCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Rejected constructor parameters (non-prime p, n out of range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class OutOfTable : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a group file or construction expression. Carries the 1-based line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dlstar

#endif  // DLSTAR_ERRORS_HPP
