#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperspec {

enum class ErrorCode {
  // input
  EmptyEdge,
  VertexOutOfRange,
  DuplicateEdge,
  SyntaxError,
  // preconditions
  NoEdges,
  OrderTooSmall,
  IsolatedVertex,
  CapExceeded,
  DimensionMismatch,
  KindUnsupported,
  DimensionNot2,
  IrrationalEntries,
  TooLarge,
  OrderMismatch,
  InfeasibleSpec,
  PreconditionFailed,
  // numerics
  NotConverged,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyEdge: return "EmptyEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::KindUnsupported: return "KindUnsupported";
    case ErrorCode::DimensionNot2: return "DimensionNot2";
    case ErrorCode::IrrationalEntries: return "IrrationalEntries";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotConverged: return "NotConverged";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a stable code; the CLI maps
/// codes onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  bool is_input_error() const noexcept {
    return code_ == ErrorCode::EmptyEdge || code_ == ErrorCode::VertexOutOfRange ||
           code_ == ErrorCode::DuplicateEdge || code_ == ErrorCode::SyntaxError;
  }

 private:
  ErrorCode code_;
};

}  // namespace hyperspec
