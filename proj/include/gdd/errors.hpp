#pragma once

#include <stdexcept>
#include <string>

namespace gdd {

enum class ErrorCode {
    NonPrime,
    ResourceLimit,
    SpecMismatch,
    DivisionByZero,
    DuplicatePoles,
    InvalidDatum,
    ResidueSumNonzero,
    SizeNotMultipleOfP,
    ZeroScale,
    WrongPrime,
    MalformedCandidate,
    DegenerateOrbit,
    ParseError,
    UnknownStep,
    InvalidArgument,
};

/// All library errors are thrown as Error; verdicts (invalid datum, failed
/// search, failed certificate step) are ordinary return values, never thrown.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DuplicatePoles: return "DuplicatePoles";
    case ErrorCode::InvalidDatum: return "InvalidDatum";
    case ErrorCode::ResidueSumNonzero: return "ResidueSumNonzero";
    case ErrorCode::SizeNotMultipleOfP: return "SizeNotMultipleOfP";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::WrongPrime: return "WrongPrime";
    case ErrorCode::MalformedCandidate: return "MalformedCandidate";
    case ErrorCode::DegenerateOrbit: return "DegenerateOrbit";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownStep: return "UnknownStep";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace gdd
