#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arrtop {

// Machine-readable error kinds. The CLI maps input errors (see
// is_input_error) to exit code 2, InternalAssertion to 1 and everything else
// to exit code 3.
enum class ErrorCode {
  ParseError,
  ZeroForm,
  EmptyArrangement,
  ZeroConstantTerm,
  InexactDivision,
  HyperplaneContainsSubspace,
  NotL0Generic,
  RankOutOfRange,
  WorkBoundExceeded,
  InconsistentMilnorData,
  NonIntegerMu,
  NonIsolated,
  InconsistentCount,
  NotSupersolvable,
  NegativeCoefficient,
  NonIntegerRank,
  FrameworkNotApplicable,
  PreconditionViolation,
  InternalAssertion,
};

std::string_view error_name(ErrorCode code);

// True for errors caused by malformed input data rather than by a violated
// mathematical precondition.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace arrtop
