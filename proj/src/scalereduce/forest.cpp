#include "slackkit/scalereduce/forest.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "slackkit/error.hpp"

namespace slackkit::scale {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// BFS over the given edges; roots tried in order: columns first, then rows.
SpanningForest orientedForest(const NonIncidenceGraph& g, const std::vector<NonIncidenceGraph::Edge>& edges) {
  std::vector<std::vector<std::size_t>> incident(g.nodeCount());  // edge positions, by variable
  for (std::size_t k = 0; k < edges.size(); ++k) {
    incident[g.rowNode(edges[k].row)].push_back(k);
    incident[g.colNode(edges[k].col)].push_back(k);
  }
  std::vector<bool> seen(g.nodeCount(), false);
  SpanningForest f;
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < g.cols; ++j) order.push_back(g.colNode(j));
  for (std::size_t i = 0; i < g.rows; ++i) order.push_back(g.rowNode(i));
  for (std::size_t root : order) {
    if (seen[root]) continue;
    seen[root] = true;
    f.roots.push_back(root);
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t k : incident[u]) {
        const auto& e = edges[k];
        const std::size_t w = u == g.rowNode(e.row) ? g.colNode(e.col) : g.rowNode(e.row);
        if (seen[w]) continue;
        seen[w] = true;
        f.edges.push_back({e.var, u, w});
        q.push(w);
      }
    }
  }
  return f;
}

}  // namespace

std::size_t NonIncidenceGraph::componentCount() const {
  UnionFind uf(nodeCount());
  std::size_t n = nodeCount();
  for (const Edge& e : edges) n -= uf.unite(rowNode(e.row), colNode(e.col));
  return n;
}

NonIncidenceGraph nonIncidenceGraph(const SymbolicSlackMatrix& s) {
  NonIncidenceGraph g;
  g.rows = s.rows();
  g.cols = s.cols();
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (s.at(i, j).kind == slack::CellKind::Variable) g.edges.push_back({s.at(i, j).var, i, j});
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) { return a.var < b.var; });
  return g;
}

std::vector<std::size_t> SpanningForest::variables() const {
  std::vector<std::size_t> out;
  for (const Edge& e : edges) out.push_back(e.var);
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<ScaledSlackMatrix, SpanningForest> setOnesForest(const SymbolicSlackMatrix& s) {
  const NonIncidenceGraph g = nonIncidenceGraph(s);
  SpanningForest f = orientedForest(g, g.edges);
  ScaledSlackMatrix y{s, f.variables()};
  return {std::move(y), std::move(f)};
}

SpanningForest forestFromEdges(const SymbolicSlackMatrix& s, std::span<const std::size_t> vars) {
  const NonIncidenceGraph g = nonIncidenceGraph(s);
  std::vector<std::size_t> wanted(vars.begin(), vars.end());
  std::sort(wanted.begin(), wanted.end());
  if (std::adjacent_find(wanted.begin(), wanted.end()) != wanted.end())
    throw Error(ErrorKind::NotAForest, "repeated variable in forest");
  std::vector<NonIncidenceGraph::Edge> chosen;
  for (const auto& e : g.edges)
    if (std::binary_search(wanted.begin(), wanted.end(), e.var)) chosen.push_back(e);
  if (chosen.size() != wanted.size())
    throw Error(ErrorKind::NotAForest, "forest names a variable that is not an edge of the matrix");
  UnionFind uf(g.nodeCount());
  for (const auto& e : chosen)
    if (!uf.unite(g.rowNode(e.row), g.colNode(e.col)))
      throw Error(ErrorKind::NotAForest, "edge x" + std::to_string(e.var) + " closes a cycle");
  return orientedForest(g, chosen);
}

ScaledSlackMatrix setOnes(const SymbolicSlackMatrix& s, std::span<const std::size_t> vars) {
  const SpanningForest f = forestFromEdges(s, vars);
  return ScaledSlackMatrix{s, f.variables()};
}

}  // namespace slackkit::scale
