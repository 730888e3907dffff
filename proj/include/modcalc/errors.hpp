#pragma once

#include <stdexcept>
#include <string>

namespace modcalc {

enum class ErrorCode {
  InvalidIndex,
  SignatureMismatch,
  ConflictingEntry,
  InvalidSpec,
  ConsistencyFailure,
  SlopeUndefined,
  UnsupportedIndex,
  NonCoveringCertificate,
  CrossTermNegative,
  NoConvergence,
  ParameterAmbiguous,
  DecompositionFailure,
  FaceCheckFailure,
  RatioMismatch,
  ParseError,
};

const char* error_name(ErrorCode code);

class CalcError : public std::runtime_error {
 public:
  CalcError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw CalcError(code, message);
}

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::ConflictingEntry: return "ConflictingEntry";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorCode::SlopeUndefined: return "SlopeUndefined";
    case ErrorCode::UnsupportedIndex: return "UnsupportedIndex";
    case ErrorCode::NonCoveringCertificate: return "NonCoveringCertificate";
    case ErrorCode::CrossTermNegative: return "CrossTermNegative";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ParameterAmbiguous: return "ParameterAmbiguous";
    case ErrorCode::DecompositionFailure: return "DecompositionFailure";
    case ErrorCode::FaceCheckFailure: return "FaceCheckFailure";
    case ErrorCode::RatioMismatch: return "RatioMismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace modcalc
