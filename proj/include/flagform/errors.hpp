#ifndef FLAGFORM_ERRORS_HPP
#define FLAGFORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flagform {

// Machine-readable error codes surfaced by the CLI as {"error":{"code":...}}.
enum class ErrorCode {
  DuplicateHyperplane,
  ZeroForm,
  WeightLengthMismatch,
  IndexOutOfRange,
  DegreeMismatch,
  DimensionMismatch,
  DegreeOverflow,
  FlatNotInLattice,
  WeightSumNonzero,
  EqualIndices,
  PreconditionViolated,
  ParseError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DuplicateHyperplane: return "DuplicateHyperplane";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::WeightLengthMismatch: return "WeightLengthMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::FlatNotInLattice: return "FlatNotInLattice";
    case ErrorCode::WeightSumNonzero: return "WeightSumNonzero";
    case ErrorCode::EqualIndices: return "EqualIndices";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace flagform

#endif
