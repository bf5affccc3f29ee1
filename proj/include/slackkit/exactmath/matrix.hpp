#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "slackkit/exactmath/rational.hpp"

namespace slackkit::exact {

/// Dense row-major matrix of Rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  /// Throws Error(RaggedRows) if the rows differ in length.
  static RationalMatrix fromRows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  std::vector<Rational> column(std::size_t j) const;
  std::span<const Rational> entries() const { return entries_; }

  RationalMatrix transposed() const;
  RationalMatrix selectRows(std::span<const std::size_t> rows) const;
  RationalMatrix selectColumns(std::span<const std::size_t> cols) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const RationalMatrix& m);

/// Exact determinant by fraction-free elimination; throws Error(NonSquare).
Rational det(const RationalMatrix& m);

/// Reduced row echelon form with zero rows dropped; pivot columns are reported through `pivots`
/// when non-null.
RationalMatrix reducedRowEchelon(const RationalMatrix& m,
                                 std::vector<std::size_t>* pivots = nullptr);

/// Rows form a basis of {x : m x = 0}, in reduced row echelon form.
RationalMatrix kernelBasis(const RationalMatrix& m);

}  // namespace slackkit::exact
