#include "fidlab/error.hpp"

namespace fidlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPsd: return "NotPsd";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularPair: return "SingularPair";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InvalidPovm: return "InvalidPovm";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DecompositionInfeasible: return "DecompositionInfeasible";
    case ErrorCode::DegenerateZ: return "DegenerateZ";
    case ErrorCode::RootAmbiguity: return "RootAmbiguity";
    case ErrorCode::SOutOfRange: return "SOutOfRange";
    case ErrorCode::DegenerateFrame: return "DegenerateFrame";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace fidlab
