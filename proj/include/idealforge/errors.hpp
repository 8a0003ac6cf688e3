#ifndef IDEALFORGE_ERRORS_HPP
#define IDEALFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace idealforge {

enum class ErrorCode {
    NotPrime,
    FieldTooLarge,
    FieldMismatch,
    DivisionByZero,
    DivisionByZeroPoly,
    ZeroPolynomial,
    InexactDivision,
    DimensionMismatch,
    IndexOutOfRange,
    NotMonic,
    ZeroConstantTerm,
    DegreeZero,
    NotSquarefree,
    IncompleteRoots,
    NotPrimeField,
    DegreeTooLarge,
    TooLarge,
    ZeroCode,
    SpanDeficit,
    ExhaustedRetries,
    VerificationFailed,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

/// All library failures are reported through this type; code() identifies
/// the condition, what() carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::FieldTooLarge: return "FieldTooLarge";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::InexactDivision: return "InexactDivision";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
        case ErrorCode::DegreeZero: return "DegreeZero";
        case ErrorCode::NotSquarefree: return "NotSquarefree";
        case ErrorCode::IncompleteRoots: return "IncompleteRoots";
        case ErrorCode::NotPrimeField: return "NotPrimeField";
        case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::ZeroCode: return "ZeroCode";
        case ErrorCode::SpanDeficit: return "SpanDeficit";
        case ErrorCode::ExhaustedRetries: return "ExhaustedRetries";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

}  // namespace idealforge

#endif  // IDEALFORGE_ERRORS_HPP
