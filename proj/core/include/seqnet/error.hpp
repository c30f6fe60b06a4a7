#pragma once

#include <stdexcept>
#include <string>

namespace seqnet {

// One code per failure family named in the module contracts. Callers that
// care about the kind of failure switch on code(); the message carries the
// specifics.
enum class ErrorCode {
  InvalidSize,
  InvalidEdit,
  OccupiedLink,
  SizeLimit,
  InvalidComparison,
  InvalidWeights,
  InvalidParameter,
  Divergence,
  ConvergenceFailure,
  InvalidBudget,
  InvalidInput,
  InvalidPath,
  InvalidSchedule,
  InvalidHorizon,
  NoMove,
  Saturation,
  InvalidBase,
  InvalidConfig,
  ReproductionFailure,
  InvariantViolation,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

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

}  // namespace seqnet
