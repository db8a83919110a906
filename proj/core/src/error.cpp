#include "halfmmp/error.hpp"

namespace halfmmp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotSnc: return "NotSnc";
    case ErrorCode::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorCode::AmbiguousTwigs: return "AmbiguousTwigs";
    case ErrorCode::NotTree: return "NotTree";
    case ErrorCode::InvalidCenter: return "InvalidCenter";
    case ErrorCode::NotMinusOne: return "NotMinusOne";
    case ErrorCode::WouldCreateUnrepresentable: return "WouldCreateUnrepresentable";
    case ErrorCode::NotRelated: return "NotRelated";
    case ErrorCode::UnsupportedConfiguration: return "UnsupportedConfiguration";
    case ErrorCode::InadmissibleSequence: return "InadmissibleSequence";
    case ErrorCode::GenusFormulaViolated: return "GenusFormulaViolated";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MalformedFiber: return "MalformedFiber";
    case ErrorCode::StructuralViolation: return "StructuralViolation";
  }
  return "UnknownError";
}

}  // namespace halfmmp
