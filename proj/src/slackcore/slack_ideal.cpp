#include "slackkit/slackcore/slack_ideal.hpp"

#include <algorithm>
#include <map>

#include "slackkit/scalereduce/forest.hpp"

namespace slackkit::slack {

Ideal slackIdeal(std::size_t d, const SymbolicSlackMatrix& s) {
  std::vector<Polynomial> gens = minors(s, d + 2);
  if (gens.empty()) return Ideal(s.nvars(), {});
  return gb::saturateByVariables(Ideal(s.nvars(), std::move(gens)), s.variables());
}

Ideal slackIdeal(std::size_t d, const SlackMatrix& s) { return slackIdeal(d, symbolicSlackMatrix(s)); }

Ideal slackIdeal(const geom::PointConfiguration& v, Source object) {
  const SlackMatrix s = slackMatrix(v, object);
  const std::size_t d = object == Source::Matroid ? exact::rank(v.homogenized()) - 1 : v.dimension();
  return slackIdeal(d, s);
}

Ideal graphicIdeal(const SymbolicSlackMatrix& s) {
  const scale::NonIncidenceGraph g = scale::nonIncidenceGraph(s);
  const auto [scaled, forest] = scale::setOnesForest(s);

  // parent edge of every non-root node
  struct Up {
    std::size_t node;
    std::size_t var;
  };
  std::map<std::size_t, Up> parent;
  std::vector<std::size_t> depth(g.nodeCount(), 0);
  for (const auto& e : forest.edges) {
    parent[e.target] = Up{e.source, e.var};
    depth[e.target] = depth[e.source] + 1;
  }
  std::vector<bool> inForest(s.nvars(), false);
  for (const auto& e : forest.edges) inForest[e.var] = true;

  std::vector<Polynomial> gens;
  for (const auto& e : g.edges) {
    if (inForest[e.var]) continue;
    // cycle: e, then j up to the meeting point, then down to i
    std::vector<std::size_t> fromRow, fromCol;
    std::size_t a = g.rowNode(e.row), b = g.colNode(e.col);
    while (a != b) {
      if (depth[a] >= depth[b]) {
        fromRow.push_back(parent.at(a).var);
        a = parent.at(a).node;
      } else {
        fromCol.push_back(parent.at(b).var);
        b = parent.at(b).node;
      }
    }
    std::vector<std::size_t> cycle{e.var};
    cycle.insert(cycle.end(), fromCol.begin(), fromCol.end());
    cycle.insert(cycle.end(), fromRow.rbegin(), fromRow.rend());
    poly::Monomial plus(s.nvars()), minus(s.nvars());
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      poly::Monomial& m = k % 2 == 0 ? plus : minus;
      m.multiplyVariable(cycle[k]);
    }
    gens.push_back(Polynomial::monomial(plus) - Polynomial::monomial(minus));
  }
  if (gens.empty()) return Ideal(s.nvars(), {});
  return gb::saturateByVariables(Ideal(s.nvars(), std::move(gens)), s.variables());
}

}  // namespace slackkit::slack
