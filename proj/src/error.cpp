#include "superext/error.hpp"

namespace superext {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotInBlock: return "NotInBlock";
    case ErrorCode::SignIllegal: return "SignIllegal";
    case ErrorCode::SignRequired: return "SignRequired";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
    case ErrorCode::Typical: return "Typical";
    case ErrorCode::MalformedDiagram: return "MalformedDiagram";
    case ErrorCode::NoSymbol: return "NoSymbol";
    case ErrorCode::MoveUndefined: return "MoveUndefined";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OspLambdaZero: return "OspLambdaZero";
    case ErrorCode::EqualWeights: return "EqualWeights";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::MixedCharacters: return "MixedCharacters";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace superext
