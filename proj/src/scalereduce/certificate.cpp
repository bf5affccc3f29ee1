#include <algorithm>

#include "slackkit/scalereduce/reduce.hpp"

namespace slackkit::scale {

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class k = 1; k * k <= n; ++k)
    if (n % k == 0) {
      small.push_back(k);
      if (k * k != n) large.push_back(n / k);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<exact::Rational> rationalRoots(const poly::Polynomial& p, std::size_t var) {
  using exact::Rational;
  if (p.isZero() || p.isConstant()) return {};
  std::uint32_t deg = 0;
  for (const auto& t : p.terms()) deg = std::max<std::uint32_t>(deg, t.monomial.exponent(var));
  std::vector<Rational> coeff(deg + 1, Rational(0));  // coeff[k] of var^k
  for (const auto& t : p.terms()) coeff[t.monomial.exponent(var)] += t.coefficient;

  // integer coefficients
  mpz_class l = 1;
  for (const Rational& c : coeff) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> a;
  for (const Rational& c : coeff) a.push_back(c.numerator() * (l / c.denominator()));

  std::vector<Rational> roots;
  std::size_t low = 0;
  while (low < a.size() && a[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  const auto value = [&](const Rational& x) {
    Rational acc = 0;
    for (std::size_t k = a.size(); k-- > low;) acc = acc * x + Rational(a[k]);
    return acc;
  };
  if (a.size() - low > 1) {
    for (const mpz_class& num : divisors(a[low]))
      for (const mpz_class& den : divisors(a.back()))
        for (int s : {1, -1}) {
          const Rational x(mpz_class(s * num), den);
          if (value(x).isZero()) roots.push_back(x);
        }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Certificate irrationalityCertificate(const gb::Ideal& ideal, std::size_t keep) {
  std::vector<std::size_t> others;
  for (std::size_t v = 0; v < ideal.nvars(); ++v)
    if (v != keep) others.push_back(v);
  const gb::Ideal image = gb::eliminate(ideal, others);
  Certificate c;
  c.variable = keep;
  c.minimalPolynomial = poly::Polynomial(ideal.nvars());
  if (!image.basis().empty()) c.minimalPolynomial = image.basis().front().monic();
  if (c.minimalPolynomial.isConstant()) return c;
  c.rationalRoots = rationalRoots(c.minimalPolynomial, keep);
  c.kind = c.rationalRoots.empty() ? Certificate::Kind::Irrational : Certificate::Kind::Inconclusive;
  return c;
}

}  // namespace slackkit::scale
