#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "slackkit/slackcore/slack_matrix.hpp"

namespace slackkit::scale {

using slack::ScaledSlackMatrix;
using slack::SymbolicSlackMatrix;

/// Nodes 0..rows-1 are rows, rows..rows+cols-1 are columns.
struct NonIncidenceGraph {
  struct Edge {
    std::size_t var;
    std::size_t row;
    std::size_t col;
  };

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Edge> edges;  // variable cells only, by variable index; fixed ones are not edges

  std::size_t nodeCount() const { return rows + cols; }
  std::size_t rowNode(std::size_t i) const { return i; }
  std::size_t colNode(std::size_t j) const { return rows + j; }
  std::size_t componentCount() const;
};

NonIncidenceGraph nonIncidenceGraph(const SymbolicSlackMatrix& s);

struct SpanningForest {
  struct Edge {
    std::size_t var;
    std::size_t source;
    std::size_t target;
  };

  std::vector<Edge> edges;          // root to leaf
  std::vector<std::size_t> roots;   // one per component

  std::vector<std::size_t> variables() const;
};

std::pair<ScaledSlackMatrix, SpanningForest> setOnesForest(const SymbolicSlackMatrix& s);

/// Orients the chosen edges away from the lowest column node of each tree
/// (or the lowest row node if a tree has no column). Throws Error(NotAForest).
SpanningForest forestFromEdges(const SymbolicSlackMatrix& s, std::span<const std::size_t> vars);

ScaledSlackMatrix setOnes(const SymbolicSlackMatrix& s, std::span<const std::size_t> vars);

}  // namespace slackkit::scale
