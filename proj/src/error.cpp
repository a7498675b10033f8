#include "tanglelink/error.hpp"

namespace tanglelink {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::DivisionByZero: return "DivisionByZero";
  case ErrorCode::EmptySequence: return "EmptySequence";
  case ErrorCode::InfiniteTangle: return "InfiniteTangle";
  case ErrorCode::InvalidSpec: return "InvalidSpec";
  case ErrorCode::Overflow: return "Overflow";
  case ErrorCode::HasHTangle: return "HasHTangle";
  case ErrorCode::NotMontesinosScope: return "NotMontesinosScope";
  case ErrorCode::ParityViolation: return "ParityViolation";
  case ErrorCode::NotATangle: return "NotATangle";
  case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

} // namespace tanglelink
