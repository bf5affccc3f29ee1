#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "slackkit/error.hpp"
#include "slackkit/exactmath/matrix.hpp"

using slackkit::Error;
using slackkit::ErrorKind;
using slackkit::exact::Rational;
using slackkit::exact::RationalMatrix;

TEST_SUITE("exactmath") {

TEST_CASE("rationals stay in lowest terms") {
  const Rational a(6, 4);
  CHECK(a.numerator() == 3);
  CHECK(a.denominator() == 2);
  const Rational b(3, -9);
  CHECK(b.numerator() == -1);
  CHECK(b.denominator() == 3);
  CHECK((a + b).toString() == "7/6");
  CHECK((a * b).toString() == "-1/2");
  CHECK((a / b).toString() == "-9/2");
  CHECK(Rational(4, 2).toString() == "2");
  CHECK(Rational(0, 5).isZero());
}

TEST_CASE("parse accepts signs and fractions") {
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("12345678901234567890").toString() == "12345678901234567890");
}

TEST_CASE("parse rejects garbage") {
  for (const char* bad : {"", "1/0", "abc", "1.5", "2/", "/3", "1//2"}) {
    CAPTURE(bad);
    try {
      (void)Rational::parse(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadRational);
      CHECK(e.isInputError());
    }
  }
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS(Rational(0).inverse());
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("ordering and sign") {
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(2, 3) > Rational(3, 5));
  CHECK(Rational(-5, 7).sign() == -1);
  CHECK(Rational(-5, 7).abs() == Rational(5, 7));
}

TEST_CASE("field axioms on random values") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  for (int trial = 0; trial < 300; ++trial) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b) + b == a);
    if (!b.isZero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 8; ++trial) {
      const RationalMatrix m = oracle::randomMatrix(rng, n, n);
      CHECK(slackkit::exact::det(m) == oracle::leibnizDet(m));
    }
}

TEST_CASE("determinant of a singular matrix is zero") {
  RationalMatrix m = RationalMatrix::fromRows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(slackkit::exact::det(m).isZero());
}

TEST_CASE("det rejects non-square input") {
  try {
    (void)slackkit::exact::det(RationalMatrix(2, 3));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonSquare);
  }
}

TEST_CASE("rank agrees with plain elimination") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6, k = 1 + rng() % 4;
    // product of thin factors has rank at most k
    const RationalMatrix m = oracle::randomMatrix(rng, r, k) * oracle::randomMatrix(rng, k, c);
    CHECK(slackkit::exact::rank(m) == oracle::naiveRank(m));
    CHECK(slackkit::exact::rank(m) <= k);
  }
}

TEST_CASE("kernel basis spans the null space") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 2 + rng() % 5;
    const RationalMatrix m = oracle::randomMatrix(rng, r, 2) * oracle::randomMatrix(rng, 2, c);
    const RationalMatrix k = slackkit::exact::kernelBasis(m);
    CHECK(k.rows() == c - slackkit::exact::rank(m));
    const RationalMatrix prod = m * k.transposed();
    for (const Rational& x : prod.entries()) CHECK(x.isZero());
    if (k.rows() > 0) CHECK(slackkit::exact::rank(k) == k.rows());
  }
}

TEST_CASE("reduced row echelon form reports pivots") {
  const RationalMatrix m = RationalMatrix::fromRows({{0, 2, 4}, {1, 1, 1}, {1, 3, 5}});
  std::vector<std::size_t> pivots;
  const RationalMatrix r = slackkit::exact::reducedRowEchelon(m, &pivots);
  CHECK(pivots == std::vector<std::size_t>{0, 1});
  // zero rows are dropped
  CHECK(r == RationalMatrix::fromRows({{1, 0, -1}, {0, 1, 2}}));
}

TEST_CASE("fromRows rejects ragged input") {
  try {
    (void)RationalMatrix::fromRows({{1, 2}, {3}});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RaggedRows);
  }
}

TEST_CASE("transpose and selection") {
  const RationalMatrix m = RationalMatrix::fromRows({{1, 2, 3}, {4, 5, 6}});
  CHECK(m.transposed().transposed() == m);
  const std::size_t cols[] = {2, 0};
  CHECK(m.selectColumns(cols) == RationalMatrix::fromRows({{3, 1}, {6, 4}}));
  const std::size_t rows[] = {1};
  CHECK(m.selectRows(rows) == RationalMatrix::fromRows({{4, 5, 6}}));
}

}
