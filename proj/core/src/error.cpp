#include "boolring/error.hpp"

namespace boolring {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotAZeroDivisorPair: return "NotAZeroDivisorPair";
    case ErrorCode::InfeasibleText: return "InfeasibleText";
    case ErrorCode::EmptySide: return "EmptySide";
    case ErrorCode::EmptyLeft: return "EmptyLeft";
    case ErrorCode::DisconnectedPairGraph: return "DisconnectedPairGraph";
    case ErrorCode::InvalidAssignment: return "InvalidAssignment";
    case ErrorCode::TooManyTexts: return "TooManyTexts";
    case ErrorCode::ContradictoryMasks: return "ContradictoryMasks";
    case ErrorCode::NotAnEigenpair: return "NotAnEigenpair";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::MalformedCatalog: return "MalformedCatalog";
    case ErrorCode::DuplicateStatement: return "DuplicateStatement";
    case ErrorCode::EmptyCatalog: return "EmptyCatalog";
    case ErrorCode::PatternError: return "PatternError";
    case ErrorCode::UnknownId: return "UnknownId";
  }
  return "Unknown";
}

}  // namespace boolring
