#pragma once

#include <stdexcept>
#include <string>

namespace hdq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested hypercube order is not of the form 2^a 3^b.
class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

/// The requested object would exceed the configured step budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A construction produced something that fails its own postcondition.
/// Seeing one of these means either bad input (e.g. a non-merging set) or a bug.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hdq
