#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace halfmmp {

enum class ErrorCode {
  SingularMatrix,
  NotSnc,
  NotNegativeDefinite,
  AmbiguousTwigs,
  NotTree,
  InvalidCenter,
  NotMinusOne,
  WouldCreateUnrepresentable,
  NotRelated,
  UnsupportedConfiguration,
  InadmissibleSequence,
  GenusFormulaViolated,
  ParseError,
  MalformedFiber,
  StructuralViolation,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// JSON input errors carry the 1-based position of the offending byte.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(ErrorCode::ParseError, what + " (line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ")"),
        line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace halfmmp
