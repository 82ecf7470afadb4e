#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace numsg {

enum class ErrorCode {
  NotCoprime,
  NotAMember,
  IsN,
  NotAnMdSet,
  WrongQuotient,
  InvalidA,
  BadBase,
  BadTarget,
  BadFactorization,
  NotInDelta,
  InDDelta,
  IsDDelta,
  BadGluing,
  BoundTooSmall,
  NotNumerical,
  InvalidArgument,
  ParseError,
  Overflow,
  TooLarge,
};

/// Stable machine-readable name, e.g. "NotCoprime".
std::string_view code_name(ErrorCode code) noexcept;

/// Every domain failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace numsg
