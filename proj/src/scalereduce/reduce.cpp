#include "slackkit/scalereduce/reduce.hpp"

#include <algorithm>
#include <set>

#include "slackkit/error.hpp"

namespace slackkit::scale {

namespace {

void requireNumeric(const SlackMatrix& s) {
  if (!s.hasNumericData())
    throw Error(ErrorKind::NeedsNumericData, "flag checks need a numeric slack matrix, not a support pattern");
}

std::size_t rowRank(const SlackMatrix& s, const std::vector<std::size_t>& rows) {
  return rows.empty() ? 0 : exact::rank(s.entries.selectRows(rows));
}

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Extends `chain` one column at a time, each step dropping the rank of the
// common zero rows by exactly one, until a single vertex remains.
class FlagSearch {
 public:
  FlagSearch(const SlackMatrix& s, std::vector<std::size_t> candidates)
      : s_(s), candidates_(std::move(candidates)) {}

  bool run(std::vector<std::size_t>& chain) {
    std::vector<std::size_t> all(s_.rows());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return extend(all, rowRank(s_, all), chain);
  }

 private:
  bool extend(const std::vector<std::size_t>& face, std::size_t rank, std::vector<std::size_t>& chain) {
    if (rank == 1) return true;
    if (!dead_.insert(face).second) return false;
    for (std::size_t c : candidates_) {
      if (std::find(chain.begin(), chain.end(), c) != chain.end()) continue;
      std::vector<std::size_t> next = intersect(face, s_.zeroSets[c]);
      if (rowRank(s_, next) + 1 != rank) continue;
      chain.push_back(c);
      if (extend(next, rank - 1, chain)) return true;
      chain.pop_back();
    }
    return false;
  }

  const SlackMatrix& s_;
  std::vector<std::size_t> candidates_;
  std::set<std::vector<std::size_t>> dead_;
};

std::vector<std::size_t> checkedColumns(std::span<const std::size_t> cols, std::size_t limit) {
  std::vector<std::size_t> out(cols.begin(), cols.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && out.back() >= limit)
    throw Error(ErrorKind::BadInput, "column index " + std::to_string(out.back()) + " out of range");
  return out;
}

ReducedSlackMatrix assemble(std::size_t d, const std::vector<std::vector<bool>>& support,
                            std::vector<std::size_t> kept) {
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  const std::size_t rows = support.size();
  const std::size_t cols = rows == 0 ? 0 : support[0].size();
  for (std::size_t j = 0; j < cols; ++j) {
    if (std::binary_search(kept.begin(), kept.end(), j)) continue;
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < rows; ++i) zeros += !support[i][j];
    if (zeros != d)
      throw Error(ErrorKind::ComplementNotSimplicial,
                  "dropped column " + std::to_string(j) + " has " + std::to_string(zeros) + " zeros");
  }
  std::vector<std::vector<bool>> reduced(rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j : kept) reduced[i].push_back(support[i][j]);
  return ReducedSlackMatrix{SymbolicSlackMatrix::fromPattern(reduced), std::move(kept)};
}

std::vector<std::size_t> nonSimplicial(std::size_t d, const std::vector<std::vector<bool>>& support) {
  std::vector<std::size_t> out;
  const std::size_t cols = support.empty() ? 0 : support[0].size();
  for (std::size_t j = 0; j < cols; ++j) {
    std::size_t zeros = 0;
    for (const auto& row : support) zeros += !row[j];
    if (zeros > d) out.push_back(j);
  }
  return out;
}

}  // namespace

std::size_t inferredDimension(const SlackMatrix& s) {
  const std::size_t r = exact::rank(s.entries);
  return r == 0 ? 0 : r - 1;
}

bool containsFlag(std::span<const std::size_t> cols, const SlackMatrix& s) {
  requireNumeric(s);
  std::vector<std::size_t> chain;
  return FlagSearch(s, checkedColumns(cols, s.cols())).run(chain);
}

std::optional<std::vector<std::size_t>> findFlag(const SlackMatrix& s, std::span<const std::size_t> preferred) {
  requireNumeric(s);
  std::vector<std::size_t> order = checkedColumns(preferred, s.cols());
  for (std::size_t j = 0; j < s.cols(); ++j)
    if (std::find(order.begin(), order.end(), j) == order.end()) order.push_back(j);
  std::vector<std::size_t> chain;
  if (!FlagSearch(s, order).run(chain)) return std::nullopt;
  return chain;
}

ReducedSlackMatrix reducedSlackMatrix(std::size_t d, const SlackMatrix& s,
                                      const std::optional<std::vector<std::size_t>>& flag) {
  const auto support = slack::supportOf(s.entries);
  std::vector<std::size_t> kept = nonSimplicial(d, support);
  if (flag) {
    const std::vector<std::size_t> f = checkedColumns(*flag, s.cols());
    if (s.hasNumericData() && !containsFlag(f, s))
      throw Error(ErrorKind::NoFlagFound, "the given columns do not contain a flag");
    kept.insert(kept.end(), f.begin(), f.end());
  } else {
    const auto found = findFlag(s, kept);
    if (!found) throw Error(ErrorKind::NoFlagFound, "no flag among the columns");
    kept.insert(kept.end(), found->begin(), found->end());
  }
  return assemble(d, support, std::move(kept));
}

ReducedSlackMatrix reducedSlackMatrix(std::size_t d, const SymbolicSlackMatrix& s,
                                      const std::vector<std::size_t>& flag) {
  const auto support = s.support();
  std::vector<std::size_t> kept = nonSimplicial(d, support);
  const std::vector<std::size_t> f = checkedColumns(flag, s.cols());
  kept.insert(kept.end(), f.begin(), f.end());
  return assemble(d, support, std::move(kept));
}

}  // namespace slackkit::scale
