#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mtrs {

enum class ErrorKind {
  invalid_argument,
  dimension_mismatch,
  parse,
  reducible_modulus,
  division_by_zero,
  budget_exceeded,
  precondition,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every module; the CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::dimension_mismatch: return "dimension_mismatch";
    case ErrorKind::parse: return "parse";
    case ErrorKind::reducible_modulus: return "reducible_modulus";
    case ErrorKind::division_by_zero: return "division_by_zero";
    case ErrorKind::budget_exceeded: return "budget_exceeded";
    case ErrorKind::precondition: return "precondition";
  }
  return "unknown";
}

}  // namespace mtrs
