#pragma once

#include <cstddef>
#include <vector>

#include "slackkit/exactmath/matrix.hpp"

namespace slackkit::geom {

using exact::Rational;
using exact::RationalMatrix;

/// n points in Q^d, one per row.
struct PointConfiguration {
  RationalMatrix points;

  std::size_t size() const { return points.rows(); }
  std::size_t dimension() const { return points.cols(); }

  /// Rows [1 | v_i].
  RationalMatrix homogenized() const;
  /// Dimension of the affine span (-1 for an empty configuration).
  long affineDimension() const;
};

/// Hyperplane {x : b - alpha^T x = 0} with the points lying on it.
struct AffineHyperplane {
  Rational offset;                      // b
  std::vector<Rational> normal;         // alpha
  std::vector<std::size_t> incident;    // ascending point indices

  Rational slack(std::span<const Rational> point) const;
};

/// Facets of conv(V) by brute force over d-subsets of the points.
///
/// Each facet is scaled to a primitive integer inequality with nonnegative
/// slacks; facets are sorted by their incidence sets. Throws
/// Error(NotFullDimensional) or Error(NonVertexPoint).
std::vector<AffineHyperplane> facetsFromVertices(const PointConfiguration& v);

/// Hyperplanes (flats of rank r-1) of the matroid of the homogenized points,
/// sorted by incidence set. Normals come straight from the kernel and carry
/// no sign normalization.
std::vector<AffineHyperplane> matroidHyperplanes(const PointConfiguration& v);

struct GaleTransform {
  RationalMatrix matrix;  // (n - d - 1) x n, column i belongs to point i
};

GaleTransform galeTransform(const PointConfiguration& v);

struct Circuit {
  std::vector<std::size_t> support;   // ascending
  std::vector<Rational> coefficients; // one per support index
};

/// Circuits of the columns of G with an all-positive dependence, scaled so
/// the coefficient of the smallest support index is 1, sorted by support.
std::vector<Circuit> positiveCircuits(const GaleTransform& g);

/// Determinant of the columns `cols` of m, in the given order. Throws
/// Error(SizeMismatch) unless cols.size() == m.rows().
Rational pluecker(const RationalMatrix& m, std::span<const std::size_t> cols);

}  // namespace slackkit::geom
