#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mft {

enum class ErrorKind {
  // input / precondition errors
  ParallelLines,
  ZeroVector,
  NotConvex,
  CollinearVertices,
  ParallelEdges,
  TooFewVertices,
  NonFiniteCoordinate,
  SameEdge,
  GenerationFailed,
  NotClockwiseTriple,
  InvalidEdgePair,
  InfiniteTriangle,
  NotChasing,
  PreconditionViolated,
  NoTangentWithDirection,
  NoCommonTangent,
  ParseError,
  InstanceTooLarge,
  // internal invariant failures
  NonMonotoneDirection,
  DMonotonicityViolated,
  CommonTangentInvalid,
  InvariantViolated,
};

const char* to_string(ErrorKind kind) noexcept;

// True for kinds that signal a broken internal invariant rather than bad input.
bool is_internal(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail, std::vector<long> indices = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<long>& indices() const noexcept { return indices_; }

 private:
  ErrorKind kind_;
  std::vector<long> indices_;
};

}  // namespace mft
