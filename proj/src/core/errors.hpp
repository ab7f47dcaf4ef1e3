#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xic {

enum class ErrorCode {
  invalid_argument,
  index_out_of_range,
  duplicate_edge,
  length_mismatch,
  precondition_violated,
  not_proper,
  infeasible_degrees,
  parse_error,
  budget_exhausted,
  io_error,
  internal_error,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::index_out_of_range: return "index_out_of_range";
    case ErrorCode::duplicate_edge: return "duplicate_edge";
    case ErrorCode::length_mismatch: return "length_mismatch";
    case ErrorCode::precondition_violated: return "precondition_violated";
    case ErrorCode::not_proper: return "not_proper";
    case ErrorCode::infeasible_degrees: return "infeasible_degrees";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::budget_exhausted: return "budget_exhausted";
    case ErrorCode::io_error: return "io_error";
    case ErrorCode::internal_error: return "internal_error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with 1-based line/column of the offending input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorCode::parse_error,
              message + " (line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace xic
