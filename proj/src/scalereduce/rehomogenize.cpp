#include "slackkit/scalereduce/rehomogenize.hpp"

#include <algorithm>

#include "slackkit/slackcore/slack_ideal.hpp"

namespace slackkit::scale {

Ideal dehomogenizedIdeal(std::size_t d, const ScaledSlackMatrix& y) {
  const SymbolicSlackMatrix r = y.resolved();
  std::vector<Polynomial> gens = slack::minors(r, d + 2);
  const std::vector<std::size_t> vars = y.survivors();
  Ideal ideal(r.nvars(), std::move(gens));
  if (ideal.generators().empty() || vars.empty()) return ideal;
  return gb::saturateByVariables(ideal, vars);
}

Polynomial rehomogenizePoly(const Polynomial& p, const ScaledSlackMatrix& y, const SpanningForest& f) {
  const poly::Multigrading g = y.base.grading();
  const std::size_t rows = y.base.rows();
  std::vector<poly::Term> terms(p.terms().begin(), p.terms().end());
  for (auto it = f.edges.rbegin(); it != f.edges.rend(); ++it) {
    const bool rowNode = it->target < rows;
    const std::size_t index = rowNode ? it->target : it->target - rows;
    const auto degreeAt = [&](const poly::Monomial& m) {
      std::uint32_t deg = 0;
      for (const auto& [v, e] : m.support()) {
        const auto& where = rowNode ? g.rowOf[v] : g.colOf[v];
        if (where && *where == index) deg += e;
      }
      return deg;
    };
    std::uint32_t top = 0;
    for (const auto& t : terms) top = std::max(top, degreeAt(t.monomial));
    for (auto& t : terms) {
      const std::uint32_t deg = degreeAt(t.monomial);
      if (deg < top) t.monomial.multiplyVariable(it->var, top - deg);
    }
  }
  return Polynomial::fromTerms(p.nvars(), std::move(terms));
}

Ideal rehomogenizeIdeal(std::size_t d, const ScaledSlackMatrix& y, const SpanningForest& f,
                        const std::optional<Ideal>& dehomogenized) {
  const Ideal base = dehomogenized ? *dehomogenized : dehomogenizedIdeal(d, y);
  std::vector<Polynomial> gens;
  for (const Polynomial& b : base.basis()) gens.push_back(rehomogenizePoly(b, y, f));
  const std::vector<std::size_t> vars = f.variables();
  Ideal ideal(base.nvars(), std::move(gens));
  if (ideal.generators().empty() || vars.empty()) return ideal;
  return gb::saturateByVariables(ideal, vars);
}

}  // namespace slackkit::scale
