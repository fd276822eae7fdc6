#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace reeb {

enum class ErrorCode {
  // graph model
  MalformedGraph,
  InvalidGraph,
  InvalidWindow,
  NonGenericCut,
  EmptyWindow,
  // assignment
  NoLowerBoundary,
  NoUpperBoundary,
  ConflictingPropagation,
  UnassignedFrontier,
  EmptyFrontier,
  NonConsecutiveFrontier,
  NothingToAssign,
  BrokenUniqueness,
  InvariantViolation,
  IncompleteAssignment,
  // surfaces
  NotAManifold,
  NotOrientable,
  DegenerateField,
  OpenCycle,
  MissingWitness,
  // generator
  InvalidParams,
  GenerationFailed,
  // io
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace reeb
