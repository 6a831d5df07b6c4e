#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kham {

enum class ErrorKind {
  InvalidArgument,
  HypothesisNotMet,
  TooSmall,
  TooLarge,
  InvalidPath,
  PreconditionViolated,
  BudgetExceeded,
  Parse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Diagnostics from the graph text format; `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace kham
