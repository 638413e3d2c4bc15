#pragma once

#include <stdexcept>
#include <string>

namespace twoband {

enum class ErrorCode {
    LengthMismatch,
    SignViolation,
    BadOffset,
    NotSquare,
    DimensionMismatch,
    NotCoprime,
    EmptyBand,
    ShapeMismatch,
    InconsistentCounts,
    OracleFailure,
    NegativeOmega,
    NoConvergence,
    TooLarge,
    RealityViolation,
    DistinctnessViolation,
    SizeMismatch,
    InvalidInput,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception carrying a machine-checkable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::SignViolation: return "SignViolation";
        case ErrorCode::BadOffset: return "BadOffset";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::EmptyBand: return "EmptyBand";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::InconsistentCounts: return "InconsistentCounts";
        case ErrorCode::OracleFailure: return "OracleFailure";
        case ErrorCode::NegativeOmega: return "NegativeOmega";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::RealityViolation: return "RealityViolation";
        case ErrorCode::DistinctnessViolation: return "DistinctnessViolation";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "UnknownError";
}

} // namespace twoband
