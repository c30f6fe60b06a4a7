#include "seqnet/error.hpp"

namespace seqnet {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSize: return "invalid-size";
    case ErrorCode::InvalidEdit: return "invalid-edit";
    case ErrorCode::OccupiedLink: return "occupied-link";
    case ErrorCode::SizeLimit: return "size-limit";
    case ErrorCode::InvalidComparison: return "invalid-comparison";
    case ErrorCode::InvalidWeights: return "invalid-weights";
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::Divergence: return "divergence";
    case ErrorCode::ConvergenceFailure: return "convergence-failure";
    case ErrorCode::InvalidBudget: return "invalid-budget";
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::InvalidPath: return "invalid-path";
    case ErrorCode::InvalidSchedule: return "invalid-schedule";
    case ErrorCode::InvalidHorizon: return "invalid-horizon";
    case ErrorCode::NoMove: return "no-move";
    case ErrorCode::Saturation: return "saturation";
    case ErrorCode::InvalidBase: return "invalid-base";
    case ErrorCode::InvalidConfig: return "invalid-config";
    case ErrorCode::ReproductionFailure: return "reproduction-failure";
    case ErrorCode::InvariantViolation: return "invariant-violation";
  }
  return "unknown";
}

}  // namespace seqnet
