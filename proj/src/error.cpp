#include "numsg/error.hpp"

namespace numsg {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::IsN: return "IsN";
    case ErrorCode::NotAnMdSet: return "NotAnMdSet";
    case ErrorCode::WrongQuotient: return "WrongQuotient";
    case ErrorCode::InvalidA: return "InvalidA";
    case ErrorCode::BadBase: return "BadBase";
    case ErrorCode::BadTarget: return "BadTarget";
    case ErrorCode::BadFactorization: return "BadFactorization";
    case ErrorCode::NotInDelta: return "NotInDelta";
    case ErrorCode::InDDelta: return "InDDelta";
    case ErrorCode::IsDDelta: return "IsDDelta";
    case ErrorCode::BadGluing: return "BadGluing";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::NotNumerical: return "NotNumerical";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

}  // namespace numsg
