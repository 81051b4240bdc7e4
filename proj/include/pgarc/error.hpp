#pragma once

#include <stdexcept>
#include <string>

namespace pgarc {

enum class ErrorCode {
    NonPrimeCharacteristic,
    DegreeZero,
    OrderTooLarge,
    InvZero,
    EqualPoints,
    DuplicatePoints,
    DuplicatePoint,
    CollinearTriple,
    PointCovered,
    AlreadyMember,
    ArcAlreadyComplete,
    StepCapExceeded,
    OrderTooLargeForOracle,
    VerificationFailed,
    NotPrimePower,
    DomainError,
    ParseError,
    BelowLowerBound,
    UnknownKind,
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::InvZero: return "InvZero";
    case ErrorCode::EqualPoints: return "EqualPoints";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::CollinearTriple: return "CollinearTriple";
    case ErrorCode::PointCovered: return "PointCovered";
    case ErrorCode::AlreadyMember: return "AlreadyMember";
    case ErrorCode::ArcAlreadyComplete: return "ArcAlreadyComplete";
    case ErrorCode::StepCapExceeded: return "StepCapExceeded";
    case ErrorCode::OrderTooLargeForOracle: return "OrderTooLargeForOracle";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BelowLowerBound: return "BelowLowerBound";
    case ErrorCode::UnknownKind: return "UnknownKind";
    }
    return "Unknown";
}

// Single exception type for all domain errors; the code distinguishes
// the failure class so callers and tests can match on it.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace pgarc
