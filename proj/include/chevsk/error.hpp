#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chevsk {

enum class ErrorCode {
  NotAUnit,
  InvalidType,
  CoveringUnavailable,
  DimensionMismatch,
  BadPrecision,
  LevelTooLow,
  UnsupportedPrime,
  NotGenerating,
  TooLarge,
  IndexOutOfRange,
  ZeroLetter,
  CertificateMismatch,
  BadParams,
  InvalidElement,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

// Process exit status used by the CLI for each error kind (0 is success,
// 1 is reserved for "checks ran but failed").
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chevsk
