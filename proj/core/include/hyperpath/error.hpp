#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperpath {

enum class ErrorCode {
  EdgeArity,
  VertexOutOfRange,
  RepeatedVertexInEdge,
  DuplicateEdge,
  NotPairUniform,
  ParseError,
  InvalidParameter,
  NonIntegral,
  OrderTooLarge,
  InfeasibleDegree,
  InvalidPath,
  OracleBudget,
  // Postcondition failures of the constructive moves. Any of these means
  // either an implementation bug or a broken proof step; never swallow them.
  RotationPostconditionFailed,
  SplicePostconditionFailed,
  UnfoldPostconditionFailed,
};

std::string_view to_string(ErrorCode code);

bool is_lemma_step_failure(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0);

  ErrorCode code() const noexcept { return code_; }
  // 1-based input line for parse errors, 0 otherwise.
  int line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

}  // namespace hyperpath
