#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tanglelink {

enum class ErrorCode {
  DivisionByZero,
  EmptySequence,
  InfiniteTangle,
  InvalidSpec,
  Overflow,
  HasHTangle,
  NotMontesinosScope,
  ParityViolation,
  NotATangle,
  ParseError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

// Carries the 0-based character offset at which parsing stopped.
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::ParseError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace tanglelink
