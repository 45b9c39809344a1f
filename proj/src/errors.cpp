#include "upo/errors.hpp"

namespace upo {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::BoundaryNotLeaf: return "BoundaryNotLeaf";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorKind::MalformedToken: return "MalformedToken";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::MarkersNotSorted: return "MarkersNotSorted";
    case ErrorKind::OverlappingDomains: return "OverlappingDomains";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NotAdmissibleUpo: return "NotAdmissibleUpo";
    case ErrorKind::WireFusionCollision: return "WireFusionCollision";
    case ErrorKind::InvalidCell: return "InvalidCell";
    case ErrorKind::WidthMismatch: return "WidthMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::OrderDomainMismatch: return "OrderDomainMismatch";
  }
  return "UnknownError";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::vector<std::string> witness)
    : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

}  // namespace upo
