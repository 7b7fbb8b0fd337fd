#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace patmine {

enum class ErrorCode {
  EdgeOutOfRange,
  LabelArityMismatch,
  EmptyLabel,
  VertexNotInGraph,
  PatternTooLarge,
  InvalidDataset,
  EmptyDataset,
  InvalidConfig,
  InfeasibleEdgeTarget,
  SyntaxError,
  NonDenseVertexIds,
  UnknownClassTag,
  DuplicateBlockId,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the graph-file readers. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace patmine
