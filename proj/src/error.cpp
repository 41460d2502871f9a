#include "klsum/error.hpp"

namespace klsum {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotASubfield: return "NotASubfield";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::ScaleExceeded: return "ScaleExceeded";
    case ErrorCode::TowerMismatch: return "TowerMismatch";
    case ErrorCode::RootFindingFailure: return "RootFindingFailure";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NonPolynomialResult: return "NonPolynomialResult";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroParameterT: return "ZeroParameterT";
    case ErrorCode::EmptyPartition: return "EmptyPartition";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::SingularInput: return "SingularInput";
    case ErrorCode::CompositionMismatch: return "CompositionMismatch";
    case ErrorCode::InvalidHypothesis: return "InvalidHypothesis";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace klsum
