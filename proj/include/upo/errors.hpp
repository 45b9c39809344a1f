#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace upo {

enum class ErrorKind {
  CycleDetected,
  BoundaryNotLeaf,
  DuplicateId,
  DanglingEndpoint,
  MalformedToken,
  UnknownVertex,
  UnknownEdge,
  MarkersNotSorted,
  OverlappingDomains,
  DomainMismatch,
  ArityMismatch,
  NotAdmissibleUpo,
  WireFusionCollision,
  InvalidCell,
  WidthMismatch,
  TooLarge,
  SyntaxError,
  ValidationError,
  OrderDomainMismatch,
};

const char* to_string(ErrorKind kind);

/// Library failure. `witness()` lists the vertex/edge tokens implicated in
/// the failure, in the most useful order for a caller that wants to point at
/// the offending entities.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::string> witness = {});

  ErrorKind kind() const { return kind_; }
  const std::vector<std::string>& witness() const { return witness_; }

  int line = 0;    // 1-based source line when raised by a text parser, else 0
  int stage = -1;  // stage index when raised inside a staged pipeline, else -1

 private:
  ErrorKind kind_;
  std::vector<std::string> witness_;
};

}  // namespace upo
