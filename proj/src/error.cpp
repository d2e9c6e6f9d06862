#include "mockcong/error.hpp"

namespace mockcong {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OffsetMismatch: return "OffsetMismatch";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
    case ErrorCode::IncompatibleModulus: return "IncompatibleModulus";
    case ErrorCode::BeyondPrecision: return "BeyondPrecision";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OracleBoundExceeded: return "OracleBoundExceeded";
    case ErrorCode::NonCoprimeModuli: return "NonCoprimeModuli";
    case ErrorCode::EvenInput: return "EvenInput";
    case ErrorCode::BDivisibleBySix: return "BDivisibleBySix";
    case ErrorCode::NonInvertibleA: return "NonInvertibleA";
    case ErrorCode::BadUnit: return "BadUnit";
    case ErrorCode::BadMatrix: return "BadMatrix";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::BadQ: return "BadQ";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::GrammarError: return "GrammarError";
    case ErrorCode::UnknownSeries: return "UnknownSeries";
  }
  return "Unknown";
}

}  // namespace mockcong
