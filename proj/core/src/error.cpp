#include "gtshift/error.hpp"

namespace gtshift {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadLabel: return "bad label";
    case ErrorKind::SelfLoop: return "self-loop";
    case ErrorKind::DuplicateEdge: return "duplicate edge";
    case ErrorKind::WrongEdgeCount: return "wrong edge count";
    case ErrorKind::Cycle: return "cycle";
    case ErrorKind::TreeDisconnected: return "tree disconnected";
    case ErrorKind::ComplementDisconnected: return "complement disconnected";
    case ErrorKind::OrderOutOfRange: return "order out of range";
    case ErrorKind::NotAnEdge: return "not an edge";
    case ErrorKind::PendantEdge: return "pendant edge";
    case ErrorKind::InvalidMove: return "invalid move";
    case ErrorKind::InvalidMatrix: return "invalid matrix";
    case ErrorKind::NonUnitVector: return "non-unit vector";
    case ErrorKind::AlphaOutOfRange: return "alpha out of range";
    case ErrorKind::NoConvergence: return "no convergence";
    case ErrorKind::UniverseMismatch: return "universe mismatch";
    case ErrorKind::Parse: return "parse error";
  }
  return "unknown";
}

}  // namespace gtshift
