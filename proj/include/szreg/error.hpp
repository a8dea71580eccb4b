#pragma once

#include <stdexcept>
#include <string>

namespace szreg {

enum class ErrorCode {
  EmptySet,
  InvalidPartition,
  InvalidGraph,
  BadEpsilon,
  TooLarge,
  NotSubset,
  InvalidWitness,
  UnequalSizes,
  BadParams,
  ParseError,
  IoError,
};

const char* to_string(ErrorCode code) noexcept;

/// Recoverable failure of a library operation. The code identifies the
/// contract that was violated; what() carries a human-readable detail.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  ErrorCode code_;
  std::string detail_;
};

} // namespace szreg
