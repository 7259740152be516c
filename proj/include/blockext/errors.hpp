#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blockext {

enum class Errc {
  InvalidInput,
  ParseError,
  OrderBoundExceeded,
  PrimeDividesE,
  ActionInvalid,
  ZNotCentral,
  ZNotCyclic,
  PhiNotFaithful,
  DecompositionFailed,
  AssumptionViolated,
  NotSubgroup,
  MismatchedGroups,
  OrthogonalityFailure,
  NoSuitablePrime,
  DimensionCheck,
  PrecisionUnstable,
  IdempotentNotSplit,
  ConductorMismatch,
  SizeGuard,
  CrossCheckMismatch,
  EnumerationBoundExceeded,
};

std::string_view errc_name(Errc code);

/// True for the codes that mean a configured resource bound was hit.
bool is_resource_error(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace blockext
