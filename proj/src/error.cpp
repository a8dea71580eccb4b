#include "szreg/error.hpp"

namespace szreg {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::EmptySet: return "EmptySet";
  case ErrorCode::InvalidPartition: return "InvalidPartition";
  case ErrorCode::InvalidGraph: return "InvalidGraph";
  case ErrorCode::BadEpsilon: return "BadEpsilon";
  case ErrorCode::TooLarge: return "TooLarge";
  case ErrorCode::NotSubset: return "NotSubset";
  case ErrorCode::InvalidWitness: return "InvalidWitness";
  case ErrorCode::UnequalSizes: return "UnequalSizes";
  case ErrorCode::BadParams: return "BadParams";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

} // namespace szreg
