#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "slackkit/exactmath/matrix.hpp"
#include "slackkit/geometry/geometry.hpp"
#include "slackkit/polyring/multigrading.hpp"
#include "slackkit/polyring/polynomial.hpp"

namespace slackkit::slack {

using exact::Rational;
using exact::RationalMatrix;
using poly::Polynomial;

enum class Source { Polytope, Matroid, Pattern };

struct SlackMatrix {
  RationalMatrix entries;
  Source source = Source::Pattern;
  std::vector<std::vector<std::size_t>> zeroSets;  // per column, ascending row indices

  std::size_t rows() const { return entries.rows(); }
  std::size_t cols() const { return entries.cols(); }
  bool hasNumericData() const { return source != Source::Pattern; }

  static SlackMatrix fromEntries(RationalMatrix m, Source source);
};

enum class CellKind : std::uint8_t { Zero, One, Variable };

struct Cell {
  CellKind kind = CellKind::Zero;
  std::size_t var = 0;  // meaningful for Variable cells
};

/// Zero / one / variable grid over a polynomial ring with nvars() variables.
class SymbolicSlackMatrix {
 public:
  SymbolicSlackMatrix() = default;
  SymbolicSlackMatrix(std::size_t rows, std::size_t cols, std::vector<Cell> cells, std::size_t nvars);

  /// Row-major 0-based variables on the nonzero cells.
  static SymbolicSlackMatrix fromPattern(const std::vector<std::vector<bool>>& support);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }
  const Cell& at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  bool isSupport(std::size_t i, std::size_t j) const { return at(i, j).kind != CellKind::Zero; }

  /// Variables that actually appear, ascending.
  std::vector<std::size_t> variables() const;
  std::size_t supportSize() const;
  std::vector<std::vector<bool>> support() const;
  std::size_t zeroCount(std::size_t col) const;

  Polynomial entry(std::size_t i, std::size_t j) const;
  poly::Multigrading grading() const;
  SymbolicSlackMatrix selectColumns(std::span<const std::size_t> cols) const;

  friend bool operator==(const SymbolicSlackMatrix&, const SymbolicSlackMatrix&);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nvars_ = 0;
  std::vector<Cell> cells_;
};

inline bool operator==(const Cell& a, const Cell& b) {
  return a.kind == b.kind && (a.kind != CellKind::Variable || a.var == b.var);
}

/// A symbolic matrix with some of its variables fixed to 1; variable names
/// are not renumbered.
struct ScaledSlackMatrix {
  SymbolicSlackMatrix base;
  std::vector<std::size_t> onesAt;  // ascending

  SymbolicSlackMatrix resolved() const;
  std::vector<std::size_t> survivors() const;
};

SlackMatrix slackMatrix(const geom::PointConfiguration& v, Source object = Source::Polytope);

/// Throws Error(DegeneratePattern) on an all-zero row or column.
SymbolicSlackMatrix symbolicSlackMatrix(const SlackMatrix& s);
SymbolicSlackMatrix symbolicSlackMatrix(const std::vector<std::vector<bool>>& support);

std::vector<std::vector<bool>> supportOf(const RationalMatrix& m);

/// Row-permutation-independent check that a and b differ by positive row and
/// column scalings.
bool scalingEquivalent(const RationalMatrix& a, const RationalMatrix& b);

using Builtin = std::variant<SlackMatrix, SymbolicSlackMatrix>;

/// "square", "prism", "perles-reduced", "sphere1963-reduced"; Error(UnknownName) otherwise.
Builtin specificSlackMatrix(std::string_view name);
std::vector<std::string_view> builtinNames();

}  // namespace slackkit::slack
