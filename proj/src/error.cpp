#include "patmine/error.hpp"

namespace patmine {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EdgeOutOfRange: return "EdgeOutOfRange";
    case ErrorCode::LabelArityMismatch: return "LabelArityMismatch";
    case ErrorCode::EmptyLabel: return "EmptyLabel";
    case ErrorCode::VertexNotInGraph: return "VertexNotInGraph";
    case ErrorCode::PatternTooLarge: return "PatternTooLarge";
    case ErrorCode::InvalidDataset: return "InvalidDataset";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InfeasibleEdgeTarget: return "InfeasibleEdgeTarget";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NonDenseVertexIds: return "NonDenseVertexIds";
    case ErrorCode::UnknownClassTag: return "UnknownClassTag";
    case ErrorCode::DuplicateBlockId: return "DuplicateBlockId";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

ParseError::ParseError(ErrorCode code, std::size_t line, const std::string& message)
    : Error(code, "line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace patmine
