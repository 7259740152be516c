#include "blockext/errors.hpp"

namespace blockext {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::ParseError: return "ParseError";
    case Errc::OrderBoundExceeded: return "OrderBoundExceeded";
    case Errc::PrimeDividesE: return "PrimeDividesE";
    case Errc::ActionInvalid: return "ActionInvalid";
    case Errc::ZNotCentral: return "ZNotCentral";
    case Errc::ZNotCyclic: return "ZNotCyclic";
    case Errc::PhiNotFaithful: return "PhiNotFaithful";
    case Errc::DecompositionFailed: return "DecompositionFailed";
    case Errc::AssumptionViolated: return "AssumptionViolated";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::MismatchedGroups: return "MismatchedGroups";
    case Errc::OrthogonalityFailure: return "OrthogonalityFailure";
    case Errc::NoSuitablePrime: return "NoSuitablePrime";
    case Errc::DimensionCheck: return "DimensionCheck";
    case Errc::PrecisionUnstable: return "PrecisionUnstable";
    case Errc::IdempotentNotSplit: return "IdempotentNotSplit";
    case Errc::ConductorMismatch: return "ConductorMismatch";
    case Errc::SizeGuard: return "SizeGuard";
    case Errc::CrossCheckMismatch: return "CrossCheckMismatch";
    case Errc::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
  }
  return "Unknown";
}

bool is_resource_error(Errc code) {
  return code == Errc::OrderBoundExceeded || code == Errc::SizeGuard ||
         code == Errc::EnumerationBoundExceeded;
}

}  // namespace blockext
