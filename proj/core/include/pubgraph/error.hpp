#ifndef PUBGRAPH_ERROR_HPP
#define PUBGRAPH_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pubgraph {

/// Base class for all pubgraph errors. The CLI maps each concrete
/// subclass to a distinct process exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated an interface contract (bad arguments, too few graphs,
/// duplicate labels, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Stream-level malformation of an input document. Line/column are 1-based
/// when known, 0 otherwise.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, std::size_t line = 0,
                      std::size_t column = 0)
      : Error(describe(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string describe(const std::string& message, std::size_t line,
                              std::size_t column);

  std::size_t line_;
  std::size_t column_;
};

/// A name that is empty after normalization.
class InvalidNameError : public ParseError {
 public:
  using ParseError::ParseError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// An operation that requires a connected graph received a disconnected one.
class DisconnectedGraphError : public Error {
 public:
  using Error::Error;
};

}  // namespace pubgraph

#endif  // PUBGRAPH_ERROR_HPP
