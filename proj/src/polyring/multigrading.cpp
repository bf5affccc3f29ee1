#include "slackkit/polyring/multigrading.hpp"

#include <algorithm>

#include "slackkit/error.hpp"

namespace slackkit::poly {

bool Multidegree::homogeneous() const {
  return std::all_of(rowHomogeneous.begin(), rowHomogeneous.end(), [](bool b) { return b; }) &&
         std::all_of(colHomogeneous.begin(), colHomogeneous.end(), [](bool b) { return b; });
}

Multidegree multidegree(const Polynomial& p, const Multigrading& g) {
  Multidegree md;
  md.rowDegrees.assign(g.rows, 0);
  md.colDegrees.assign(g.cols, 0);
  md.rowHomogeneous.assign(g.rows, true);
  md.colHomogeneous.assign(g.cols, true);

  std::vector<std::vector<std::uint32_t>> rowDeg, colDeg;
  for (const Term& t : p.terms()) {
    std::vector<std::uint32_t> r(g.rows, 0), c(g.cols, 0);
    for (const auto& [v, e] : t.monomial.support()) {
      if (v >= g.rowOf.size() || !g.rowOf[v] || !g.colOf[v])
        throw Error(ErrorKind::UngradedVariable, "x" + std::to_string(v));
      r[*g.rowOf[v]] += e;
      c[*g.colOf[v]] += e;
    }
    rowDeg.push_back(std::move(r));
    colDeg.push_back(std::move(c));
  }
  for (std::size_t t = 0; t < rowDeg.size(); ++t) {
    for (std::size_t i = 0; i < g.rows; ++i) md.rowDegrees[i] = std::max(md.rowDegrees[i], rowDeg[t][i]);
    for (std::size_t j = 0; j < g.cols; ++j) md.colDegrees[j] = std::max(md.colDegrees[j], colDeg[t][j]);
  }
  for (std::size_t t = 0; t < rowDeg.size(); ++t) {
    for (std::size_t i = 0; i < g.rows; ++i)
      if (rowDeg[t][i] != md.rowDegrees[i]) md.rowHomogeneous[i] = false;
    for (std::size_t j = 0; j < g.cols; ++j)
      if (colDeg[t][j] != md.colDegrees[j]) md.colHomogeneous[j] = false;
  }
  return md;
}

}  // namespace slackkit::poly
