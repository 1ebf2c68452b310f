#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gtshift {

enum class ErrorKind {
  BadLabel,
  SelfLoop,
  DuplicateEdge,
  WrongEdgeCount,
  Cycle,
  TreeDisconnected,
  ComplementDisconnected,
  OrderOutOfRange,
  NotAnEdge,
  PendantEdge,
  InvalidMove,
  InvalidMatrix,
  NonUnitVector,
  AlphaOutOfRange,
  NoConvergence,
  UniverseMismatch,
  Parse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gtshift
