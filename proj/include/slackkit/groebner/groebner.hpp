#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "slackkit/polyring/polynomial.hpp"

namespace slackkit::gb {

using poly::Monomial;
using poly::MonomialOrder;
using poly::Polynomial;

struct GroebnerOptions {
  /// Variables whose monomial factors are divided out of every new basis
  /// element. This enlarges the ideal inside its saturation by these
  /// variables, so it is only sound when the caller saturates by them (or
  /// when they are units modulo the ideal).
  std::vector<std::size_t> strippable;
};

/// Remainder of multivariate division: no term of the result is divisible by
/// a leading term of `divisors`.
Polynomial normalForm(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& order);

/// Reduced Gröbner basis: monic, tail-reduced, sorted by descending leading
/// term. Generators are inserted one at a time, each first reduced against
/// the partial basis; S-pairs are processed by the sugar strategy with the
/// Gebauer-Möller product and chain criteria.
std::vector<Polynomial> buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                                   const GroebnerOptions& options = {});

/// S-polynomial of f and g with respect to `order` (lcm-scaled difference).
Polynomial sPolynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

}  // namespace slackkit::gb
