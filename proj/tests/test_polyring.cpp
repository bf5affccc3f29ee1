#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "slackkit/error.hpp"
#include "slackkit/polyring/multigrading.hpp"
#include "slackkit/polyring/polynomial.hpp"

using slackkit::Error;
using slackkit::ErrorKind;
using slackkit::exact::Rational;
using slackkit::poly::Monomial;
using slackkit::poly::MonomialOrder;
using slackkit::poly::Polynomial;

namespace {

std::vector<unsigned> exps(const Monomial& m) {
  std::vector<unsigned> e(m.nvars());
  for (std::size_t v = 0; v < e.size(); ++v) e[v] = m.exponent(v);
  return e;
}

Monomial randomMonomial(std::mt19937& rng, std::size_t n, unsigned maxExp) {
  std::vector<std::uint32_t> e(n);
  for (auto& x : e) x = rng() % (maxExp + 1);
  return Monomial::fromExponents(e);
}

int sign(std::strong_ordering o) { return o < 0 ? -1 : o > 0 ? 1 : 0; }

Polynomial P(const char* s, std::size_t n) { return Polynomial::parse(s, n); }

}  // namespace

TEST_SUITE("polyring") {

TEST_CASE("monomial arithmetic") {
  const std::uint32_t a[] = {2, 0, 1}, b[] = {1, 3, 0};
  const Monomial ma = Monomial::fromExponents(a), mb = Monomial::fromExponents(b);
  CHECK(ma.degree() == 3);
  CHECK(exps(ma * mb) == std::vector<unsigned>{3, 3, 1});
  CHECK(exps(lcm(ma, mb)) == std::vector<unsigned>{2, 3, 1});
  CHECK(exps(gcd(ma, mb)) == std::vector<unsigned>{1, 0, 0});
  CHECK(divides(gcd(ma, mb), ma));
  CHECK_FALSE(divides(ma, mb));
  CHECK(exps((ma * mb) / mb) == exps(ma));
  CHECK_FALSE(coprime(ma, mb));
  CHECK(coprime(Monomial::variable(3, 0), Monomial::variable(3, 2)));
}

TEST_CASE("monomial exponent overflow is an error") {
  const std::uint32_t big[] = {0xFFFF};
  const Monomial m = Monomial::fromExponents(big);
  try {
    (void)(m * m);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ExponentOverflow);
  }
}

TEST_CASE("monomial properties on random inputs") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const Monomial a = randomMonomial(rng, n, 3), b = randomMonomial(rng, n, 3);
    const Monomial l = lcm(a, b), g = gcd(a, b);
    CHECK(l * g == a * b);
    CHECK(divides(a, l));
    CHECK(divides(g, b));
    CHECK(divides(a, b) == oracle::divides(a, b));
    CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("grevlex and lex agree with the textbook definitions") {
  std::mt19937 rng(23);
  const MonomialOrder grevlex = MonomialOrder::grevlex(), lex = MonomialOrder::lex();
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 20;
    const Monomial a = randomMonomial(rng, n, 2), b = randomMonomial(rng, n, 2);
    CHECK(sign(grevlex.compare(a, b)) == oracle::grevlexCompare(exps(a), exps(b)));
    CHECK(sign(lex.compare(a, b)) == oracle::lexCompare(exps(a), exps(b)));
  }
}

TEST_CASE("term orders are multiplicative") {
  std::mt19937 rng(29);
  const std::size_t front[] = {1, 4};
  const MonomialOrder orders[] = {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(6, front)};
  for (const MonomialOrder& o : orders)
    for (int trial = 0; trial < 300; ++trial) {
      const Monomial a = randomMonomial(rng, 6, 2), b = randomMonomial(rng, 6, 2), c = randomMonomial(rng, 6, 2);
      CHECK(sign(o.compare(a, b)) == sign(o.compare(a * c, b * c)));
      CHECK(o.compare(a * c, a) >= 0);
    }
}

TEST_CASE("block order eliminates the front block") {
  const std::size_t front[] = {2};
  const MonomialOrder o = MonomialOrder::block(3, front);
  // any monomial with x2 beats any monomial without it
  const std::uint32_t withT[] = {0, 0, 1}, without[] = {5, 5, 0};
  CHECK(o.compare(Monomial::fromExponents(withT), Monomial::fromExponents(without)) > 0);
  CHECK(o.descriptor() == "block:2;3");
  CHECK(MonomialOrder::parse("block:2;3") == o);
  CHECK(MonomialOrder::parse("lex") == MonomialOrder::lex());
  CHECK_THROWS_AS(MonomialOrder::parse("deglex"), Error);
}

TEST_CASE("parse and print round trip") {
  const Polynomial p = P("x0*x3^2 - 1/2*x1 + 3", 4);
  CHECK(p.size() == 3);
  CHECK(p.totalDegree() == 3);
  CHECK(p.toString() == "x0*x3^2 - 1/2*x1 + 3");
  CHECK(P(p.toString().c_str(), 4) == p);
  CHECK(P("x1 - x1", 2).isZero());
  CHECK(P("2*x0*x0", 1) == P("2*x0^2", 1));
  CHECK(P("-x0 + x1", 2).toString(MonomialOrder::lex()) == "-x0 + x1");
}

TEST_CASE("parse errors") {
  for (const char* bad : {"", "x", "x9", "x0 x1", "1/0", "x0 +", "y1"}) {
    CAPTURE(bad);
    try {
      (void)Polynomial::parse(bad, 3);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadPolynomial);
    }
  }
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const Polynomial a = oracle::randomPolynomial(rng, n, 4), b = oracle::randomPolynomial(rng, n, 4),
                     c = oracle::randomPolynomial(rng, n, 3);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b) + b == a);
    CHECK((a - a).isZero());
    if (!a.isZero() && !b.isZero()) CHECK((a * b).totalDegree() == a.totalDegree() + b.totalDegree());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial a = oracle::randomPolynomial(rng, 3, 4), b = oracle::randomPolynomial(rng, 3, 4);
    const std::vector<Rational> pt{Rational(rng() % 5), Rational(-1, 2), Rational(rng() % 3 + 1, 3)};
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
  }
}

TEST_CASE("monic, content and division by monomials") {
  const Polynomial p = P("2*x0^2*x1 - 4*x0*x1^2", 2);
  CHECK(p.monic().toString() == "x0^2*x1 - 2*x0*x1^2");
  CHECK(p.contentMonomial() == Monomial::fromExponents(std::vector<std::uint32_t>{1, 1}));
  CHECK(p.dividedBy(p.contentMonomial()) == P("2*x0 - 4*x1", 2));
  CHECK(p.times(Monomial::variable(2, 1)) == P("2*x0^2*x1^2 - 4*x0*x1^3", 2));
}

TEST_CASE("leading terms follow the order") {
  const Polynomial p = P("x0 + x1^2", 2);
  CHECK(p.leadingTerm(MonomialOrder::grevlex()).monomial == Monomial::variable(2, 1, 2));
  CHECK(p.leadingTerm(MonomialOrder::lex()).monomial == Monomial::variable(2, 0));
}

TEST_CASE("setting variables to one and changing universe") {
  const Polynomial p = P("x0*x1 - x2^2", 3);
  const std::size_t ones[] = {2};
  CHECK(p.withVariablesSetToOne(ones) == P("x0*x1 - 1", 3));
  CHECK(p.variables() == std::vector<std::size_t>{0, 1, 2});
  CHECK(p.involves(2));
  CHECK(p.withUniverse(5).nvars() == 5);
  CHECK(p.withUniverse(5).withUniverse(3) == p);
  CHECK_THROWS_AS(p.withUniverse(2), Error);
}

TEST_CASE("mixing rings is an error") {
  try {
    (void)(Polynomial::variable(2, 0) + Polynomial::variable(3, 0));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UniverseMismatch);
  }
}

TEST_CASE("multidegree on a 2x2 grid") {
  slackkit::poly::Multigrading g;
  g.rows = 2;
  g.cols = 2;
  g.rowOf = {0, 0, 1, 1};
  g.colOf = {0, 1, 0, 1};
  const auto det = slackkit::poly::multidegree(P("x0*x3 - x1*x2", 4), g);
  CHECK(det.homogeneous());
  CHECK(det.rowDegrees == std::vector<std::uint32_t>{1, 1});
  const auto bad = slackkit::poly::multidegree(P("x0*x3 - x1", 4), g);
  CHECK_FALSE(bad.homogeneous());
  g.rowOf[3].reset();
  CHECK_THROWS_AS(slackkit::poly::multidegree(P("x3", 4), g), Error);
}

}
