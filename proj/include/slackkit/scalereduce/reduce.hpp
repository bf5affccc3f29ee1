#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slackkit/groebner/ideal.hpp"
#include "slackkit/slackcore/slack_matrix.hpp"

namespace slackkit::scale {

using slack::SlackMatrix;
using slack::SymbolicSlackMatrix;

/// Dimension of the ambient space inferred from the rank of a numeric slack matrix.
std::size_t inferredDimension(const SlackMatrix& s);

/// Whether some d of the given columns, taken in some order, cut out faces of
/// dimension d-1, ..., 0. Throws Error(NeedsNumericData) for pattern input.
bool containsFlag(std::span<const std::size_t> cols, const SlackMatrix& s);

/// Flag columns found by a depth-first search preferring `preferred` columns.
std::optional<std::vector<std::size_t>> findFlag(const SlackMatrix& s,
                                                 std::span<const std::size_t> preferred = {});

struct ReducedSlackMatrix {
  SymbolicSlackMatrix matrix;
  std::vector<std::size_t> keptColumns;  // ascending, in the input's numbering
};

ReducedSlackMatrix reducedSlackMatrix(std::size_t d, const SlackMatrix& s,
                                      const std::optional<std::vector<std::size_t>>& flag = std::nullopt);
ReducedSlackMatrix reducedSlackMatrix(std::size_t d, const SymbolicSlackMatrix& s,
                                      const std::vector<std::size_t>& flag);

struct Certificate {
  enum class Kind { Irrational, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::size_t variable = 0;
  poly::Polynomial minimalPolynomial;
  std::vector<exact::Rational> rationalRoots;

  std::string kindName() const { return kind == Kind::Irrational ? "irrational" : "inconclusive"; }
};

Certificate irrationalityCertificate(const gb::Ideal& ideal, std::size_t keep);

/// Rational roots of a univariate polynomial in `var`, ascending.
std::vector<exact::Rational> rationalRoots(const poly::Polynomial& p, std::size_t var);

}  // namespace slackkit::scale
