#pragma once

#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slackkit/polyring/monomial.hpp"

namespace slackkit::poly {

/// Term order on monomials. Variable convention: x0 > x1 > x2 > ...
///
/// BlockElimination compares the front block first by graded reverse
/// lexicographic order restricted to the block, then the remaining
/// variables the same way, so it eliminates the front block.
class MonomialOrder {
 public:
  enum class Kind { Lex, GRevLex, BlockElimination };

  MonomialOrder() = default;  // graded reverse lexicographic

  static MonomialOrder lex();
  static MonomialOrder grevlex();
  static MonomialOrder block(std::size_t nvars, std::span<const std::size_t> front);

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& frontBlock() const { return front_; }
  bool inFrontBlock(std::size_t var) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// "lex", "grevlex", or "block:i,j,k;n" (front block and ring size).
  std::string descriptor() const;
  static MonomialOrder parse(std::string_view descriptor);

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.front_ == b.front_ && a.nvars_ == b.nvars_;
  }

 private:
  Kind kind_ = Kind::GRevLex;
  std::size_t nvars_ = 0;
  std::vector<std::size_t> front_;
  boost::container::small_vector<Exponent, 48> frontMask_;
  boost::container::small_vector<Exponent, 48> restMask_;
};

}  // namespace slackkit::poly
