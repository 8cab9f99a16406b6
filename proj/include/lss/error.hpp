#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lss {

enum class ErrorCode {
  Parse,
  InvalidEdge,
  OutOfRange,
  UnknownFamily,
  BadParameter,
  SizeLimit,
  NotAMatching,
  UnsupportedShape,
  StageOutOfRange,
  MissingCertificate,
  DimensionMismatch,
  ZeroPolynomial,
  UnknownDialect,
  NotClassified,
  NotApplicable,
  NotACI,
};

std::string_view error_code_name(ErrorCode code);

// Every recoverable failure in the library is reported with this exception.
// `line` is only meaningful for Parse/InvalidEdge errors raised by the
// edge-list reader (1-based, 0 when unknown).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0)
      : std::runtime_error(message), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  int line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

}  // namespace lss
