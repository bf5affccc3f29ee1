#include "slackkit/slackcore/slack_matrix.hpp"

#include <algorithm>
#include <optional>
#include <queue>

#include "slackkit/error.hpp"

namespace slackkit::slack {

SlackMatrix SlackMatrix::fromEntries(RationalMatrix m, Source source) {
  SlackMatrix s;
  s.source = source;
  s.zeroSets.resize(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m(i, j).isZero()) s.zeroSets[j].push_back(i);
  s.entries = std::move(m);
  return s;
}

SymbolicSlackMatrix::SymbolicSlackMatrix(std::size_t rows, std::size_t cols, std::vector<Cell> cells,
                                         std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), cells_(std::move(cells)) {
  if (cells_.size() != rows * cols) throw Error(ErrorKind::SizeMismatch, "cell count does not match shape");
  for (const Cell& c : cells_)
    if (c.kind == CellKind::Variable && c.var >= nvars_)
      throw Error(ErrorKind::UniverseMismatch, "variable x" + std::to_string(c.var) + " outside the ring");
}

SymbolicSlackMatrix SymbolicSlackMatrix::fromPattern(const std::vector<std::vector<bool>>& support) {
  const std::size_t rows = support.size();
  const std::size_t cols = rows == 0 ? 0 : support[0].size();
  std::vector<Cell> cells;
  std::size_t next = 0;
  for (const auto& row : support) {
    if (row.size() != cols) throw Error(ErrorKind::RaggedRows, "pattern rows differ in length");
    for (bool b : row) cells.push_back(b ? Cell{CellKind::Variable, next++} : Cell{});
  }
  return SymbolicSlackMatrix(rows, cols, std::move(cells), next);
}

std::vector<std::size_t> SymbolicSlackMatrix::variables() const {
  std::vector<std::size_t> out;
  for (const Cell& c : cells_)
    if (c.kind == CellKind::Variable) out.push_back(c.var);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t SymbolicSlackMatrix::supportSize() const {
  return std::count_if(cells_.begin(), cells_.end(), [](const Cell& c) { return c.kind != CellKind::Zero; });
}

std::vector<std::vector<bool>> SymbolicSlackMatrix::support() const {
  std::vector<std::vector<bool>> out(rows_, std::vector<bool>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = isSupport(i, j);
  return out;
}

std::size_t SymbolicSlackMatrix::zeroCount(std::size_t col) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < rows_; ++i) n += !isSupport(i, col);
  return n;
}

Polynomial SymbolicSlackMatrix::entry(std::size_t i, std::size_t j) const {
  const Cell& c = at(i, j);
  switch (c.kind) {
    case CellKind::Zero: return Polynomial(nvars_);
    case CellKind::One: return Polynomial::constant(nvars_, 1);
    case CellKind::Variable: return Polynomial::variable(nvars_, c.var);
  }
  return Polynomial(nvars_);
}

poly::Multigrading SymbolicSlackMatrix::grading() const {
  poly::Multigrading g;
  g.rows = rows_;
  g.cols = cols_;
  g.rowOf.resize(nvars_);
  g.colOf.resize(nvars_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j).kind == CellKind::Variable) {
        g.rowOf[at(i, j).var] = i;
        g.colOf[at(i, j).var] = j;
      }
  return g;
}

SymbolicSlackMatrix SymbolicSlackMatrix::selectColumns(std::span<const std::size_t> cols) const {
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j : cols) cells.push_back(at(i, j));
  return SymbolicSlackMatrix(rows_, cols.size(), std::move(cells), nvars_);
}

bool operator==(const SymbolicSlackMatrix& a, const SymbolicSlackMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.nvars_ == b.nvars_ && a.cells_ == b.cells_;
}

SymbolicSlackMatrix ScaledSlackMatrix::resolved() const {
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < base.rows(); ++i)
    for (std::size_t j = 0; j < base.cols(); ++j) {
      Cell c = base.at(i, j);
      if (c.kind == CellKind::Variable && std::binary_search(onesAt.begin(), onesAt.end(), c.var))
        c = Cell{CellKind::One, 0};
      cells.push_back(c);
    }
  return SymbolicSlackMatrix(base.rows(), base.cols(), std::move(cells), base.nvars());
}

std::vector<std::size_t> ScaledSlackMatrix::survivors() const {
  std::vector<std::size_t> out;
  for (std::size_t v : base.variables())
    if (!std::binary_search(onesAt.begin(), onesAt.end(), v)) out.push_back(v);
  return out;
}

SlackMatrix slackMatrix(const geom::PointConfiguration& v, Source object) {
  const std::vector<geom::AffineHyperplane> hs =
      object == Source::Matroid ? geom::matroidHyperplanes(v) : geom::facetsFromVertices(v);
  RationalMatrix m(v.size(), hs.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < hs.size(); ++j) m(i, j) = hs[j].slack(v.points.row(i));
  return SlackMatrix::fromEntries(std::move(m), object);
}

std::vector<std::vector<bool>> supportOf(const RationalMatrix& m) {
  std::vector<std::vector<bool>> out(m.rows(), std::vector<bool>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = !m(i, j).isZero();
  return out;
}

SymbolicSlackMatrix symbolicSlackMatrix(const std::vector<std::vector<bool>>& support) {
  const std::size_t rows = support.size();
  const std::size_t cols = rows == 0 ? 0 : support[0].size();
  for (std::size_t i = 0; i < rows; ++i) {
    if (support[i].size() != cols) throw Error(ErrorKind::RaggedRows, "pattern rows differ in length");
    if (std::none_of(support[i].begin(), support[i].end(), [](bool b) { return b; }))
      throw Error(ErrorKind::DegeneratePattern, "row " + std::to_string(i) + " is all zero");
  }
  for (std::size_t j = 0; j < cols; ++j)
    if (std::none_of(support.begin(), support.end(), [&](const auto& r) { return r[j]; }))
      throw Error(ErrorKind::DegeneratePattern, "column " + std::to_string(j) + " is all zero");
  return SymbolicSlackMatrix::fromPattern(support);
}

SymbolicSlackMatrix symbolicSlackMatrix(const SlackMatrix& s) { return symbolicSlackMatrix(supportOf(s.entries)); }

bool scalingEquivalent(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const std::size_t n = a.rows(), f = a.cols();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < f; ++j) {
      if (a(i, j).isZero() != b(i, j).isZero()) return false;
      if (!a(i, j).isZero() && (a(i, j) / b(i, j)).sign() <= 0) return false;
    }
  // a = diag(r) b diag(c): propagate r, c over each component, then verify
  std::vector<std::optional<Rational>> r(n), c(f);
  for (std::size_t start = 0; start < n; ++start) {
    if (r[start]) continue;
    r[start] = Rational(1);
    std::queue<std::size_t> q;  // node < n is a row, otherwise column node - n
    q.push(start);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      if (u < n) {
        for (std::size_t j = 0; j < f; ++j)
          if (!a(u, j).isZero() && !c[j]) {
            c[j] = a(u, j) / (b(u, j) * *r[u]);
            q.push(n + j);
          }
      } else {
        const std::size_t j = u - n;
        for (std::size_t i = 0; i < n; ++i)
          if (!a(i, j).isZero() && !r[i]) {
            r[i] = a(i, j) / (b(i, j) * *c[j]);
            q.push(i);
          }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < f; ++j)
      if (!a(i, j).isZero() && a(i, j) != *r[i] * b(i, j) * *c[j]) return false;
  return true;
}

}  // namespace slackkit::slack
