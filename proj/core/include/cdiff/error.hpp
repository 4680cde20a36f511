#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cdiff {

enum class ErrorCode {
  kNonPrimeCharacteristic,
  kReducibleModulus,
  kDegreeMismatch,
  kDivisionByZero,
  kNonDivisorSubfieldDegree,
  kRankOutOfRange,
  kInvalidExponent,
  kEmptyPolynomial,
  kSchemaViolation,
  kFieldMismatch,
  kDegenerateCs,
  kNotRationalInteger,
  kSizeGuardExceeded,
  kFormulaMismatch,
  kSubfieldEdgeCase,
  kUnknownClaim,
  kInvalidArgument,
  kIo,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace cdiff
