#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slackkit/exactmath/rational.hpp"
#include "slackkit/polyring/monomial.hpp"
#include "slackkit/polyring/order.hpp"

namespace slackkit::poly {

using exact::Rational;

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Sparse polynomial over Q in a ring of `nvars` variables.
///
/// Terms are stored with nonzero coefficients, sorted descending in graded
/// reverse lexicographic order; the zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);
  /// Combines like terms and drops zero coefficients.
  static Polynomial fromTerms(std::size_t nvars, std::vector<Term> terms);
  /// Parses the canonical text form ("x0*x3^2 - 1/2*x1 + 3"); throws
  /// Error(BadPolynomial).
  static Polynomial parse(std::string_view text, std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.isOne()); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  std::uint32_t totalDegree() const;

  /// Terms sorted descending in `order`.
  std::vector<Term> termsIn(const MonomialOrder& order) const;
  Term leadingTerm(const MonomialOrder& order) const;

  /// Variables occurring in some term, ascending.
  std::vector<std::size_t> variables() const;
  bool involves(std::size_t var) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;
  Polynomial times(const Monomial& m) const;
  /// Exact division by a monomial dividing every term.
  Polynomial dividedBy(const Monomial& m) const;
  /// Scaled so the leading coefficient in `order` is 1.
  Polynomial monic(const MonomialOrder& order = MonomialOrder{}) const;

  /// gcd of all term monomials (1 for the zero polynomial).
  Monomial contentMonomial() const;

  /// Sets each listed variable to 1.
  Polynomial withVariablesSetToOne(std::span<const std::size_t> vars) const;
  /// Evaluates at a point (one value per ring variable).
  Rational evaluate(std::span<const Rational> point) const;

  Polynomial withUniverse(std::size_t nvars) const;

  /// Canonical text: terms descending in `order`, variables x0, x1, ...
  std::string toString(const MonomialOrder& order = MonomialOrder{}) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Term vector sorted descending in `order`, like terms merged.
void normalizeTerms(std::vector<Term>& terms, const MonomialOrder& order);

}  // namespace slackkit::poly
