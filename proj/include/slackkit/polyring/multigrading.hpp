#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "slackkit/polyring/polynomial.hpp"

namespace slackkit::poly {

/// Row/column grading of the variables of a symbolic matrix: x_v sits in
/// row rowOf[v] and column colOf[v].
struct Multigrading {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::optional<std::size_t>> rowOf;
  std::vector<std::optional<std::size_t>> colOf;
};

struct Multidegree {
  std::vector<std::uint32_t> rowDegrees;  // max over terms
  std::vector<std::uint32_t> colDegrees;
  std::vector<bool> rowHomogeneous;  // every term attains the max
  std::vector<bool> colHomogeneous;

  bool homogeneous() const;
};

/// Throws Error(UngradedVariable) if p uses a variable without a position.
Multidegree multidegree(const Polynomial& p, const Multigrading& g);

}  // namespace slackkit::poly
