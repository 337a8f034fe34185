#pragma once

#include <stdexcept>
#include <string>

namespace akstab {

// Error names are stable identifiers; the CLI prints them verbatim.
enum class ErrorCode {
  InvalidArgument,
  ExtUndefined,
  UnknownHom,
  PhaseOrderViolation,
  ZeroCharge,
  NonStableLeaf,
  StepBudgetExceeded,
  InvalidQuadruple,
  MassVanishes,
  NonGenericPath,
  NotSimple,
  CoincidentPoints,
  IndexOutOfRange,
  NonGenericLoop,
  PointCollision,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace akstab
