#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "slackkit/groebner/groebner.hpp"

namespace slackkit::gb {

/// Finitely generated ideal with a lazily computed reduced Gröbner basis.
///
/// Values are immutable. The basis cache is shared between copies and is
/// filled at most once, under std::call_once.
class Ideal {
 public:
  Ideal() : Ideal(0, {}) {}
  Ideal(std::size_t nvars, std::vector<Polynomial> generators, MonomialOrder order = {});

  /// Wraps a basis already known to be the reduced Gröbner basis for `order`.
  static Ideal fromReducedBasis(std::size_t nvars, std::vector<Polynomial> basis,
                                MonomialOrder order = {});

  std::size_t nvars() const { return nvars_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }

  const std::vector<Polynomial>& basis() const;

  bool isZero() const { return basis().empty(); }
  bool isUnit() const;
  bool contains(const Polynomial& f) const;

  /// Same ideal, basis recomputed for another order.
  Ideal withOrder(const MonomialOrder& order) const;

  /// Canonical strings of the reduced basis.
  std::vector<std::string> basisStrings() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };

  std::size_t nvars_;
  std::vector<Polynomial> generators_;
  MonomialOrder order_;
  std::shared_ptr<Cache> cache_;
};

/// I : f^∞ via a fresh variable t, the generator 1 - t f and elimination of
/// t. Throws Error(ZeroDivisorPolynomial) if f = 0.
Ideal saturate(const Ideal& ideal, const Polynomial& f);

/// I : (prod of x_v for v in vars)^∞, one variable at a time.
Ideal saturateByVariables(const Ideal& ideal, std::span<const std::size_t> vars);

/// I ∩ Q[variables not in vars].
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> vars);

/// Equal reduced Gröbner bases under the order of `a`.
bool idealEquals(const Ideal& a, const Ideal& b);

/// f ∈ √I, decided by whether 1 ∈ I + <1 - t f>.
bool radicalMembership(const Polynomial& f, const Ideal& ideal);

}  // namespace slackkit::gb
