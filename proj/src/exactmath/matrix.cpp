#include "slackkit/exactmath/matrix.hpp"

#include <utility>

#include "slackkit/error.hpp"

namespace slackkit::exact {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix RationalMatrix::fromRows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw Error(ErrorKind::RaggedRows, "row " + std::to_string(i) + " has " +
                                             std::to_string(rows[i].size()) + " entries, expected " +
                                             std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> RationalMatrix::column(std::size_t j) const {
  std::vector<Rational> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::selectRows(std::span<const std::size_t> rows) const {
  RationalMatrix out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(rows[i], j);
  return out;
}

RationalMatrix RationalMatrix::selectColumns(std::span<const std::size_t> cols) const {
  RationalMatrix out(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(i, cols[j]);
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::SizeMismatch, "matrix product dimensions");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).isZero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

namespace {

// Integer image of a rational matrix: every row multiplied by the lcm of its
// denominators. `scale` accumulates the product of those multipliers.
std::vector<std::vector<mpz_class>> integerRows(const RationalMatrix& m, mpz_class* scale) {
  std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
  if (scale) *scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (const Rational& x : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = m(i, j);
      rows[i][j] = x.numerator() * (l / x.denominator());
    }
    if (scale) *scale *= l;
  }
  return rows;
}

struct BareissResult {
  std::size_t rank = 0;
  int swapSign = 1;
  mpz_class lastPivot = 1;
};

// Fraction-free echelon reduction in place. Each division by the previous
// pivot is exact.
BareissResult bareiss(std::vector<std::vector<mpz_class>>& a, std::size_t cols) {
  BareissResult res;
  const std::size_t rows = a.size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      res.swapSign = -res.swapSign;
    }
    const mpz_class pivot = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const mpz_class factor = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = pivot * a[i][j] - factor * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = pivot;
    ++r;
  }
  res.rank = r;
  res.lastPivot = prev;
  return res;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  auto rows = integerRows(m, nullptr);
  return bareiss(rows, m.cols()).rank;
}

Rational det(const RationalMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::NonSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  if (m.rows() == 0) return 1;
  mpz_class scale;
  auto rows = integerRows(m, &scale);
  const BareissResult res = bareiss(rows, m.cols());
  if (res.rank < m.rows()) return 0;
  return Rational(res.lastPivot * res.swapSign, scale);
}

RationalMatrix reducedRowEchelon(const RationalMatrix& m, std::vector<std::size_t>* pivots) {
  RationalMatrix a = m;
  std::vector<std::size_t> pivotCols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).isZero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).isZero()) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivotCols.push_back(c);
    ++r;
  }
  RationalMatrix out(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  if (pivots) *pivots = std::move(pivotCols);
  return out;
}

RationalMatrix kernelBasis(const RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  const RationalMatrix r = reducedRowEchelon(m, &pivots);
  std::vector<bool> isPivot(m.cols(), false);
  for (std::size_t p : pivots) isPivot[p] = true;

  std::vector<std::size_t> freeCols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!isPivot[j]) freeCols.push_back(j);

  RationalMatrix basis(freeCols.size(), m.cols());
  for (std::size_t k = 0; k < freeCols.size(); ++k) {
    const std::size_t f = freeCols[k];
    basis(k, f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(k, pivots[i]) = -r(i, f);
  }
  return reducedRowEchelon(basis);
}

}  // namespace slackkit::exact
