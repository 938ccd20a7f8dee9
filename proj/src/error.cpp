#include "arrtop/error.hpp"

namespace arrtop {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::EmptyArrangement: return "EmptyArrangement";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::HyperplaneContainsSubspace: return "HyperplaneContainsSubspace";
    case ErrorCode::NotL0Generic: return "NotL0Generic";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::WorkBoundExceeded: return "WorkBoundExceeded";
    case ErrorCode::InconsistentMilnorData: return "InconsistentMilnorData";
    case ErrorCode::NonIntegerMu: return "NonIntegerMu";
    case ErrorCode::NonIsolated: return "NonIsolated";
    case ErrorCode::InconsistentCount: return "InconsistentCount";
    case ErrorCode::NotSupersolvable: return "NotSupersolvable";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::NonIntegerRank: return "NonIntegerRank";
    case ErrorCode::FrameworkNotApplicable: return "FrameworkNotApplicable";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::InternalAssertion: return "InternalAssertion";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::ZeroForm:
    case ErrorCode::EmptyArrangement:
      return true;
    default:
      return false;
  }
}

}  // namespace arrtop
