#pragma once

#include <boost/container/small_vector.hpp>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "slackkit/simd/kernels.hpp"

namespace slackkit::poly {

using simd::Exponent;

/// Monomial x^a in a ring with a fixed number of variables.
///
/// Exponents are kept in a dense lane array padded for the SIMD kernels;
/// zero exponents are simply zero lanes. The total degree and a 64-bit
/// divisibility mask (bit v % 64 set when x_v occurs) are cached.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t exponent = 1);
  static Monomial fromExponents(std::span<const std::uint32_t> exponents);

  std::size_t nvars() const { return nvars_; }
  std::uint32_t degree() const { return degree_; }
  std::uint64_t divMask() const { return divMask_; }
  bool isOne() const { return degree_ == 0; }

  Exponent exponent(std::size_t var) const { return lanes_[var]; }
  const Exponent* lanes() const { return lanes_.data(); }
  std::size_t laneCount() const { return lanes_.size(); }

  /// Sparse view: (variable, exponent) for every nonzero exponent, ascending.
  std::vector<std::pair<std::size_t, std::uint32_t>> support() const;

  /// Same exponents in a ring with `nvars` variables; dropped variables must
  /// have exponent 0.
  Monomial withUniverse(std::size_t nvars) const;

  /// Multiplies by x_var^exponent in place.
  void multiplyVariable(std::size_t var, std::uint32_t exponent = 1);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires divides(b, a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  /// a | b
  friend bool divides(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.divMask_ == b.divMask_ && a.lanes_ == b.lanes_;
  }

  std::size_t hash() const;

 private:
  void refresh();

  std::uint32_t nvars_ = 0;
  std::uint32_t degree_ = 0;
  std::uint64_t divMask_ = 0;
  boost::container::small_vector<Exponent, 48> lanes_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace slackkit::poly
