#include "reeb/error.hpp"

namespace reeb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedGraph: return "MalformedGraph";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidWindow: return "InvalidWindow";
    case ErrorCode::NonGenericCut: return "NonGenericCut";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::NoLowerBoundary: return "NoLowerBoundary";
    case ErrorCode::NoUpperBoundary: return "NoUpperBoundary";
    case ErrorCode::ConflictingPropagation: return "ConflictingPropagation";
    case ErrorCode::UnassignedFrontier: return "UnassignedFrontier";
    case ErrorCode::EmptyFrontier: return "EmptyFrontier";
    case ErrorCode::NonConsecutiveFrontier: return "NonConsecutiveFrontier";
    case ErrorCode::NothingToAssign: return "NothingToAssign";
    case ErrorCode::BrokenUniqueness: return "BrokenUniqueness";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::IncompleteAssignment: return "IncompleteAssignment";
    case ErrorCode::NotAManifold: return "NotAManifold";
    case ErrorCode::NotOrientable: return "NotOrientable";
    case ErrorCode::DegenerateField: return "DegenerateField";
    case ErrorCode::OpenCycle: return "OpenCycle";
    case ErrorCode::MissingWitness: return "MissingWitness";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace reeb
