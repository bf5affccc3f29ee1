#include <array>

#include "slackkit/error.hpp"
#include "slackkit/slackcore/slack_matrix.hpp"

namespace slackkit::slack {

namespace {

RationalMatrix fromInts(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (int x : r) out.back().emplace_back(x);
  }
  return RationalMatrix::fromRows(out);
}

SymbolicSlackMatrix perlesReduced() {
  // nonzero columns of each row; variables numbered row-major
  const std::array<std::vector<std::size_t>, 12> rows = {{
      {3, 4, 5}, {3, 6, 7, 8}, {6, 9, 10}, {4, 11, 12}, {7, 9, 11}, {0, 10, 12},
      {1, 8}, {2, 5}, {0, 3, 7}, {1, 4, 9}, {2, 6, 12}, {5, 8, 10, 11},
  }};
  std::vector<std::vector<bool>> support(12, std::vector<bool>(13, false));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j : rows[i]) support[i][j] = true;
  return SymbolicSlackMatrix::fromPattern(support);
}

SymbolicSlackMatrix sphere1963Reduced() {
  // 0 = zero, 1 = fixed one, 2 = variable (numbered row-major over these cells)
  const int grid[14][6] = {
      {0, 1, 0, 0, 0, 0}, {0, 2, 0, 0, 1, 0}, {0, 1, 0, 2, 0, 0}, {0, 1, 2, 2, 0, 0},
      {0, 2, 2, 0, 2, 1}, {0, 2, 2, 2, 2, 1}, {0, 1, 0, 1, 1, 1}, {2, 0, 2, 0, 2, 1},
      {2, 0, 2, 2, 0, 1}, {2, 0, 2, 2, 2, 1}, {2, 0, 0, 1, 0, 0}, {1, 0, 1, 0, 2, 1},
      {2, 0, 2, 2, 2, 1}, {2, 0, 2, 2, 2, 1},
  };
  std::vector<Cell> cells;
  std::size_t next = 0;
  for (const auto& row : grid)
    for (int k : row) {
      if (k == 0) cells.push_back(Cell{});
      else if (k == 1) cells.push_back(Cell{CellKind::One, 0});
      else cells.push_back(Cell{CellKind::Variable, next++});
    }
  return SymbolicSlackMatrix(14, 6, std::move(cells), next);
}

}  // namespace

std::vector<std::string_view> builtinNames() {
  return {"square", "prism", "perles-reduced", "sphere1963-reduced"};
}

Builtin specificSlackMatrix(std::string_view name) {
  if (name == "square")
    return SlackMatrix::fromEntries(fromInts({{0, 1, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 0}}),
                                    Source::Polytope);
  if (name == "prism")
    // a 0/1 realization of the scaled pattern
    return SlackMatrix::fromEntries(fromInts({{0, 1, 0, 0, 1},
                                              {1, 0, 0, 0, 1},
                                              {0, 1, 1, 0, 0},
                                              {1, 0, 1, 0, 0},
                                              {0, 1, 0, 1, 0},
                                              {1, 0, 0, 1, 0}}),
                                    Source::Polytope);
  if (name == "perles-reduced") return perlesReduced();
  if (name == "sphere1963-reduced") return sphere1963Reduced();
  throw Error(ErrorKind::UnknownName, "no built-in matrix named '" + std::string(name) + "'");
}

}  // namespace slackkit::slack
