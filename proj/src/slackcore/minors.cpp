#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "slackkit/error.hpp"
#include "slackkit/parallel.hpp"
#include "slackkit/slackcore/slack_ideal.hpp"

namespace slackkit::slack {

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// Laplace expansion along the first remaining row, memoized on the set of
// remaining columns.
class MinorExpander {
 public:
  MinorExpander(const SymbolicSlackMatrix& s, std::vector<std::size_t> rows)
      : s_(s), rows_(std::move(rows)), memo_(rows_.size() + 1) {}

  const Polynomial& det(std::size_t level, std::uint64_t mask) {
    auto& table = memo_[level];
    if (auto it = table.find(mask); it != table.end()) return it->second;
    Polynomial acc(s_.nvars());
    if (level == rows_.size()) {
      acc = Polynomial::constant(s_.nvars(), 1);
    } else {
      const std::size_t r = rows_[level];
      int sign = 1;
      for (std::uint64_t m = mask; m != 0; m &= m - 1, sign = -sign) {
        const std::size_t j = std::countr_zero(m);
        const Cell& c = s_.at(r, j);
        if (c.kind == CellKind::Zero) continue;
        const Polynomial& sub = det(level + 1, mask & ~(std::uint64_t{1} << j));
        if (sub.isZero()) continue;
        Polynomial term = c.kind == CellKind::One ? sub : sub.times(poly::Monomial::variable(s_.nvars(), c.var));
        acc = sign > 0 ? acc + term : acc - term;
      }
    }
    return table.emplace(mask, std::move(acc)).first->second;
  }

 private:
  const SymbolicSlackMatrix& s_;
  std::vector<std::size_t> rows_;
  std::vector<std::unordered_map<std::uint64_t, Polynomial>> memo_;
};

}  // namespace

std::vector<Polynomial> minors(const SymbolicSlackMatrix& s, std::size_t k) {
  if (k == 0 || k > s.rows() || k > s.cols()) return {};
  if (s.cols() > 64) throw Error(ErrorKind::SizeMismatch, "minor expansion supports at most 64 columns");
  const auto rowSets = subsets(s.rows(), k);
  const auto colSets = subsets(s.cols(), k);
  std::vector<std::vector<Polynomial>> perRowSet(rowSets.size());
  parallelFor(rowSets.size(), [&](std::size_t r) {
    MinorExpander ex(s, rowSets[r]);
    for (const auto& cols : colSets) {
      std::uint64_t mask = 0;
      for (std::size_t j : cols) mask |= std::uint64_t{1} << j;
      const Polynomial& m = ex.det(0, mask);
      if (!m.isZero()) perRowSet[r].push_back(m.monic());
    }
  });
  std::vector<Polynomial> out;
  std::unordered_set<std::string> seen;
  for (auto& list : perRowSet)
    for (Polynomial& p : list)
      if (seen.insert(p.toString()).second) out.push_back(std::move(p));
  return out;
}

mpz_class countMinors(std::size_t d, std::size_t rows, std::size_t cols) {
  const std::size_t k = d + 2;
  if (k > rows || k > cols) return 0;
  mpz_class a, b;
  mpz_bin_uiui(a.get_mpz_t(), rows, k);
  mpz_bin_uiui(b.get_mpz_t(), cols, k);
  return a * b;
}

mpz_class countMinors(std::size_t d, const SymbolicSlackMatrix& s) { return countMinors(d, s.rows(), s.cols()); }

}  // namespace slackkit::slack
