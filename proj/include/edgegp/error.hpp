#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace edgegp {

enum class ErrorCode {
  Malformed,
  Loop,
  DuplicateEdge,
  VertexOutOfRange,
  BadCharacter,
  Truncated,
  UnsupportedSize,
  DisconnectedInput,
  NotBlockGraph,
  NonDistinctEdges,
  UnknownEdge,
  Unreachable,
  TooLarge,
  EmptyEdgeSet,
  BadParameters,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::Loop: return "Loop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::BadCharacter: return "BadCharacter";
    case ErrorCode::Truncated: return "Truncated";
    case ErrorCode::UnsupportedSize: return "UnsupportedSize";
    case ErrorCode::DisconnectedInput: return "DisconnectedInput";
    case ErrorCode::NotBlockGraph: return "NotBlockGraph";
    case ErrorCode::NonDistinctEdges: return "NonDistinctEdges";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::EmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorCode::BadParameters: return "BadParameters";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace edgegp
