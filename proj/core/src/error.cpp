#include "hyperpath/error.hpp"

namespace hyperpath {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EdgeArity: return "EdgeArity";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::RepeatedVertexInEdge: return "RepeatedVertexInEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::NotPairUniform: return "NotPairUniform";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::InfeasibleDegree: return "InfeasibleDegree";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::OracleBudget: return "OracleBudget";
    case ErrorCode::RotationPostconditionFailed: return "RotationPostconditionFailed";
    case ErrorCode::SplicePostconditionFailed: return "SplicePostconditionFailed";
    case ErrorCode::UnfoldPostconditionFailed: return "UnfoldPostconditionFailed";
  }
  return "Unknown";
}

bool is_lemma_step_failure(ErrorCode code) {
  return code == ErrorCode::RotationPostconditionFailed ||
         code == ErrorCode::SplicePostconditionFailed ||
         code == ErrorCode::UnfoldPostconditionFailed;
}

namespace {

std::string decorate(ErrorCode code, const std::string& message, int line) {
  std::string out(to_string(code));
  if (line > 0) out += " (line " + std::to_string(line) + ")";
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, int line)
    : std::runtime_error(decorate(code, message, line)), code_(code), line_(line) {}

}  // namespace hyperpath
