#include "cdiff/error.hpp"

namespace cdiff {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::kReducibleModulus: return "ReducibleModulus";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kNonDivisorSubfieldDegree: return "NonDivisorSubfieldDegree";
    case ErrorCode::kRankOutOfRange: return "RankOutOfRange";
    case ErrorCode::kInvalidExponent: return "InvalidExponent";
    case ErrorCode::kEmptyPolynomial: return "EmptyPolynomial";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kDegenerateCs: return "DegenerateCs";
    case ErrorCode::kNotRationalInteger: return "NotRationalInteger";
    case ErrorCode::kSizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorCode::kFormulaMismatch: return "FormulaMismatch";
    case ErrorCode::kSubfieldEdgeCase: return "SubfieldEdgeCase";
    case ErrorCode::kUnknownClaim: return "UnknownClaim";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace cdiff
