#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slackkit {

enum class ErrorKind {
  NonSquare,
  UniverseMismatch,
  UngradedVariable,
  ZeroDivisorPolynomial,
  ExponentOverflow,
  NotFullDimensional,
  NonVertexPoint,
  SizeMismatch,
  DegeneratePattern,
  NoCircuits,
  NotACofacet,
  UnknownName,
  NotAForest,
  NeedsNumericData,
  NoFlagFound,
  ComplementNotSimplicial,
  // input errors
  RaggedRows,
  BadRational,
  BadPolynomial,
  BadInput,
};

std::string_view kindName(ErrorKind kind);

/// Domain error carrying a machine-readable kind. The CLI maps input kinds
/// (RaggedRows, BadRational, BadPolynomial, BadInput) to exit code 2 and
/// everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  bool isInputError() const noexcept;

 private:
  ErrorKind kind_;
};

}  // namespace slackkit
