#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subtan {

enum class ErrorKind {
  ChartMismatch,
  BadIndex,
  DivisionByZero,
  PoleAtPoint,
  ParseError,
  UnknownVariable,
  DegreeError,
  Degenerate,
  NotAlternating,
  Unsupported,
  PreconditionFailed,
  NotSymplectic,
  InvalidInput,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax error in coefficient text or an input document. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column),
        message_(msg) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /// The message without the position prefix.
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace subtan
