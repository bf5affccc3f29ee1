// Reference implementations used only to check the library against.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "slackkit/exactmath/matrix.hpp"
#include "slackkit/polyring/polynomial.hpp"
#include "slackkit/slackcore/slack_matrix.hpp"

namespace oracle {

using slackkit::exact::Rational;
using slackkit::exact::RationalMatrix;
using slackkit::poly::Monomial;
using slackkit::poly::MonomialOrder;
using slackkit::poly::Polynomial;

inline int permutationSign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

// Leibniz expansion; fine up to 7x7.
inline Rational leibnizDet(const RationalMatrix& m) {
  std::vector<std::size_t> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  Rational sum = 0;
  do {
    Rational prod = permutationSign(p);
    for (std::size_t i = 0; i < p.size(); ++i) prod *= m(i, p[i]);
    sum += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

template <typename Entry>
Polynomial leibnizDet(std::size_t nvars, const std::vector<std::vector<Entry>>& m) {
  std::vector<std::size_t> p(m.size());
  std::iota(p.begin(), p.end(), 0);
  Polynomial sum(nvars);
  do {
    Polynomial prod = Polynomial::constant(nvars, permutationSign(p));
    for (std::size_t i = 0; i < p.size() && !prod.isZero(); ++i) prod = prod * m[i][p[i]];
    sum = sum + prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

// Cofactor expansion along the first row, skipping zero entries; fast on
// sparse symbolic matrices of any size.
inline Polynomial laplaceDet(std::size_t nvars, const std::vector<std::vector<Polynomial>>& m) {
  if (m.empty()) return Polynomial::constant(nvars, 1);
  Polynomial sum(nvars);
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[0][j].isZero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t i = 1; i < m.size(); ++i) {
      minor.emplace_back(m[i].begin(), m[i].end());
      minor.back().erase(minor.back().begin() + static_cast<std::ptrdiff_t>(j));
    }
    const Polynomial term = m[0][j] * laplaceDet(nvars, minor);
    sum = j % 2 == 0 ? sum + term : sum - term;
  }
  return sum;
}

// Plain Gaussian elimination over the rationals.
inline std::size_t naiveRank(RationalMatrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c).isZero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(rank, j));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      const Rational f = m(i, c) / m(rank, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

// Textbook graded reverse lexicographic comparison: higher degree wins; on a
// tie, the monomial whose last nonzero entry of (a - b) is negative wins.
inline int grevlexCompare(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  const long da = std::accumulate(a.begin(), a.end(), 0L), db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

inline int lexCompare(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t v = 0; v < a.nvars(); ++v)
    if (a.exponent(v) > b.exponent(v)) return false;
  return true;
}

inline Monomial quotient(const Monomial& b, const Monomial& a) {
  std::vector<std::uint32_t> e(b.nvars());
  for (std::size_t v = 0; v < e.size(); ++v) e[v] = b.exponent(v) - a.exponent(v);
  return Monomial::fromExponents(e);
}

// Full reduction by repeated single-term cancellation.
inline Polynomial naiveReduce(Polynomial f, const std::vector<Polynomial>& g, const MonomialOrder& order) {
  Polynomial rest(f.nvars());
  while (!f.isZero()) {
    const auto lt = f.leadingTerm(order);
    bool reduced = false;
    for (const Polynomial& d : g) {
      if (d.isZero()) continue;
      const auto ld = d.leadingTerm(order);
      if (oracle::divides(ld.monomial, lt.monomial)) {
        f = f - d.times(quotient(lt.monomial, ld.monomial)).scaled(lt.coefficient / ld.coefficient);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      const Polynomial head = Polynomial::monomial(lt.monomial, lt.coefficient);
      rest = rest + head;
      f = f - head;
    }
  }
  return rest;
}

inline Polynomial sPoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const auto lf = f.leadingTerm(order), lg = g.leadingTerm(order);
  std::vector<std::uint32_t> e(f.nvars());
  for (std::size_t v = 0; v < e.size(); ++v) e[v] = std::max(lf.monomial.exponent(v), lg.monomial.exponent(v));
  const Monomial l = Monomial::fromExponents(e);
  return f.times(quotient(l, lf.monomial)).scaled(lf.coefficient.inverse()) -
         g.times(quotient(l, lg.monomial)).scaled(lg.coefficient.inverse());
}

// Buchberger's criterion plus membership of the inputs.
inline bool isGroebnerBasisOf(const std::vector<Polynomial>& basis, const std::vector<Polynomial>& gens,
                              const MonomialOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!naiveReduce(sPoly(basis[i], basis[j], order), basis, order).isZero()) return false;
  for (const Polynomial& g : gens)
    if (!naiveReduce(g, basis, order).isZero()) return false;
  return true;
}

// Reduced: monic, and no term of any element divisible by another leading term.
inline bool isReduced(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].leadingTerm(order).coefficient.isOne()) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial lj = basis[j].leadingTerm(order).monomial;
      for (const auto& t : basis[i].terms())
        if (oracle::divides(lj, t.monomial)) return false;
    }
  }
  return true;
}

// Numbers a + b*sqrt(5).
struct Q5 {
  Rational a, b;
  friend Q5 operator+(const Q5& x, const Q5& y) { return {x.a + y.a, x.b + y.b}; }
  friend Q5 operator-(const Q5& x, const Q5& y) { return {x.a - y.a, x.b - y.b}; }
  friend Q5 operator*(const Q5& x, const Q5& y) { return {x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a}; }
  Q5 inverse() const {
    const Rational n = a * a - 5 * b * b;
    return {a / n, -b / n};
  }
  bool isZero() const { return a.isZero() && b.isZero(); }
};

inline std::size_t rankQ5(std::vector<std::vector<Q5>> m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c].isZero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const Q5 inv = m[rank][c].inverse();
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Q5 f = m[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Positive row/column rescalings preserve signs and all 2x2 cross ratios
// a_ij a_kl / (a_il a_kj) over cells where all four entries are nonzero.
inline bool crossRatiosAgree(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).isZero() != b(i, j).isZero()) return false;
      if (a(i, j).sign() != b(i, j).sign()) return false;
    }
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = i + 1; k < a.rows(); ++k)
      for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t l = j + 1; l < a.cols(); ++l) {
          if (a(i, j).isZero() || a(k, l).isZero() || a(i, l).isZero() || a(k, j).isZero()) continue;
          if (a(i, j) * a(k, l) * b(i, l) * b(k, j) != b(i, j) * b(k, l) * a(i, l) * a(k, j)) return false;
        }
  return true;
}

inline RationalMatrix randomMatrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int range = 4) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(num(rng), den(rng));
  return m;
}

inline Polynomial randomPolynomial(std::mt19937& rng, std::size_t nvars, std::size_t terms, unsigned maxExp = 2) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<unsigned> exp(0, maxExp);
  std::vector<slackkit::poly::Term> ts;
  for (std::size_t k = 0; k < terms; ++k) {
    std::vector<std::uint32_t> e(nvars);
    for (auto& x : e) x = exp(rng);
    const int c = coeff(rng);
    if (c != 0) ts.push_back({Monomial::fromExponents(e), Rational(c)});
  }
  return Polynomial::fromTerms(nvars, std::move(ts));
}

}  // namespace oracle
