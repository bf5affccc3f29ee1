#include <algorithm>

#include "slackkit/error.hpp"
#include "slackkit/slackcore/slack_ideal.hpp"

namespace slackkit::slack {

namespace {

std::vector<std::size_t> complementOf(const std::vector<std::size_t>& support, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!std::binary_search(support.begin(), support.end(), i)) out.push_back(i);
  return out;
}

}  // namespace

SlackMatrix slackFromGaleCircuits(const geom::GaleTransform& g) {
  const std::size_t n = g.matrix.cols();
  std::vector<geom::Circuit> circuits = geom::positiveCircuits(g);
  if (circuits.empty()) throw Error(ErrorKind::NoCircuits, "the Gale matrix has no positive circuit");
  // same column order as slackMatrix: by zero set
  std::sort(circuits.begin(), circuits.end(), [&](const geom::Circuit& a, const geom::Circuit& b) {
    return complementOf(a.support, n) < complementOf(b.support, n);
  });
  RationalMatrix m(n, circuits.size());
  for (std::size_t j = 0; j < circuits.size(); ++j)
    for (std::size_t k = 0; k < circuits[j].support.size(); ++k)
      m(circuits[j].support[k], j) = circuits[j].coefficients[k];
  return SlackMatrix::fromEntries(std::move(m), Source::Polytope);
}

SlackMatrix slackFromGalePlucker(const geom::GaleTransform& g,
                                 const std::vector<std::vector<std::size_t>>& cofacets) {
  const RationalMatrix& gm = g.matrix;
  const std::size_t n = gm.cols();
  const std::size_t r = gm.rows();
  RationalMatrix m(n, cofacets.size());
  for (std::size_t j = 0; j < cofacets.size(); ++j) {
    std::vector<std::size_t> c = cofacets[j];
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    const auto reject = [&](const std::string& why) {
      return Error(ErrorKind::NotACofacet, "cofacet " + std::to_string(j) + ": " + why);
    };
    if (c.empty() || c.back() >= n) throw reject("index out of range");
    const RationalMatrix ker = exact::kernelBasis(gm.selectColumns(c));
    if (ker.rows() != 1) throw reject("not a circuit");
    for (std::size_t k = 0; k < c.size(); ++k)
      if (ker(0, k).sign() != ker(0, 0).sign() || ker(0, k).isZero()) throw reject("dependence is not positive");

    // pad a small support with independent columns so the Cramer vector has r + 1 entries
    std::vector<std::size_t> t = c;
    std::size_t rk = exact::rank(gm.selectColumns(t));
    for (std::size_t e = 0; e < n && t.size() < r + 1; ++e) {
      if (std::binary_search(c.begin(), c.end(), e)) continue;
      std::vector<std::size_t> trial = t;
      trial.insert(std::upper_bound(trial.begin(), trial.end(), e), e);
      const std::size_t rt = exact::rank(gm.selectColumns(trial));
      if (rt > rk) {
        t = std::move(trial);
        rk = rt;
      }
    }
    if (t.size() != r + 1 || rk != r) throw reject("support does not extend to r + 1 columns of rank r");

    std::vector<Rational> lambda(t.size());
    int sign = 0;
    for (std::size_t k = 0; k < t.size(); ++k) {
      std::vector<std::size_t> rest = t;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      lambda[k] = geom::pluecker(gm, rest);
      if (k % 2 == 1) lambda[k] = -lambda[k];
      if (sign == 0) sign = lambda[k].sign();
    }
    for (std::size_t k = 0; k < t.size(); ++k) m(t[k], j) = sign < 0 ? -lambda[k] : lambda[k];
  }
  return SlackMatrix::fromEntries(std::move(m), Source::Polytope);
}

}  // namespace slackkit::slack
