#include "slackkit/error.hpp"

namespace slackkit {

std::string_view kindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::UngradedVariable: return "UngradedVariable";
    case ErrorKind::ZeroDivisorPolynomial: return "ZeroDivisorPolynomial";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::NonVertexPoint: return "NonVertexPoint";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::DegeneratePattern: return "DegeneratePattern";
    case ErrorKind::NoCircuits: return "NoCircuits";
    case ErrorKind::NotACofacet: return "NotACofacet";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::NotAForest: return "NotAForest";
    case ErrorKind::NeedsNumericData: return "NeedsNumericData";
    case ErrorKind::NoFlagFound: return "NoFlagFound";
    case ErrorKind::ComplementNotSimplicial: return "ComplementNotSimplicial";
    case ErrorKind::RaggedRows: return "RaggedRows";
    case ErrorKind::BadRational: return "BadRational";
    case ErrorKind::BadPolynomial: return "BadPolynomial";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(kindName(kind)) + ": " + detail), kind_(kind) {}

bool Error::isInputError() const noexcept {
  return kind_ == ErrorKind::RaggedRows || kind_ == ErrorKind::BadRational ||
         kind_ == ErrorKind::BadPolynomial || kind_ == ErrorKind::BadInput;
}

}  // namespace slackkit
