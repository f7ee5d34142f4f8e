#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace covering {

enum class ErrorCode {
    Empty,
    TooSmall,
    TooLarge,
    NotPrime,
    NotCoprime,
    Duplicate,
    LengthMismatch,
    OutOfRange,
    DimensionTooLarge,
    NotSquare,
    KTooLarge,
    ProductTooLarge,
    TooManyAssignments,
    InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::Duplicate: return "Duplicate";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::ProductTooLarge: return "ProductTooLarge";
    case ErrorCode::TooManyAssignments: return "TooManyAssignments";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Thrown by every validating operation in the library. The code is stable
/// and machine-checkable; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace covering
