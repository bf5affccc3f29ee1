#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "slackkit/error.hpp"
#include "slackkit/geometry/geometry.hpp"

using slackkit::Error;
using slackkit::ErrorKind;
using namespace slackkit::geom;

namespace {

PointConfiguration square() { return {RationalMatrix::fromRows({{0, 0}, {0, 1}, {1, 1}, {1, 0}})}; }

PointConfiguration prism() {
  return {RationalMatrix::fromRows({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {1, 1, 0}})};
}

PointConfiguration cube() {
  std::vector<std::vector<Rational>> rows;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) rows.push_back({a, b, c});
  return {RationalMatrix::fromRows(rows)};
}

std::vector<Rational> pointRow(const PointConfiguration& v, std::size_t i) {
  return {v.points.row(i).begin(), v.points.row(i).end()};
}

void checkFacets(const PointConfiguration& v, const std::vector<AffineHyperplane>& facets) {
  for (const AffineHyperplane& h : facets) {
    std::set<std::size_t> on(h.incident.begin(), h.incident.end());
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Rational s = h.slack(pointRow(v, i));
      CHECK(s.sign() >= 0);
      CHECK(s.isZero() == (on.count(i) == 1));
    }
    // primitive integer normal
    mpz_class g = h.offset.numerator();
    for (const Rational& a : h.normal) {
      CHECK(a.isInteger());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.numerator().get_mpz_t());
    }
    CHECK(h.offset.isInteger());
    CHECK(g == 1);
  }
  CHECK(std::is_sorted(facets.begin(), facets.end(),
                       [](const AffineHyperplane& a, const AffineHyperplane& b) { return a.incident < b.incident; }));
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("homogenization and affine dimension") {
  const PointConfiguration v = square();
  const RationalMatrix h = v.homogenized();
  CHECK(h.cols() == 3);
  CHECK(h(2, 0) == 1);
  CHECK(h(2, 2) == 1);
  CHECK(v.affineDimension() == 2);
  CHECK(PointConfiguration{RationalMatrix::fromRows({{0, 0}, {1, 1}, {2, 2}})}.affineDimension() == 1);
}

TEST_CASE("square facets") {
  const auto facets = facetsFromVertices(square());
  REQUIRE(facets.size() == 4);
  for (const auto& f : facets) CHECK(f.incident.size() == 2);
  checkFacets(square(), facets);
}

TEST_CASE("prism facets") {
  const auto facets = facetsFromVertices(prism());
  CHECK(facets.size() == 5);
  checkFacets(prism(), facets);
  std::multiset<std::size_t> sizes;
  for (const auto& f : facets) sizes.insert(f.incident.size());
  CHECK(sizes == std::multiset<std::size_t>{3, 3, 4, 4, 4});
}

TEST_CASE("cube facets") {
  const auto facets = facetsFromVertices(cube());
  CHECK(facets.size() == 6);
  checkFacets(cube(), facets);
}

TEST_CASE("random simplices have d+1 facets") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 2 + rng() % 2;
    RationalMatrix pts = oracle::randomMatrix(rng, d + 1, d, 6);
    PointConfiguration v{pts};
    if (v.affineDimension() != static_cast<long>(d)) continue;
    const auto facets = facetsFromVertices(v);
    CHECK(facets.size() == d + 1);
    checkFacets(v, facets);
  }
}

TEST_CASE("bad vertex sets") {
  try {
    (void)facetsFromVertices({RationalMatrix::fromRows({{0, 0}, {1, 1}, {2, 2}})});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFullDimensional);
  }
  try {
    (void)facetsFromVertices({RationalMatrix::fromRows({{0, 0}, {2, 0}, {0, 2}, {1, 1}})});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonVertexPoint);
  }
  try {
    (void)facetsFromVertices({RationalMatrix::fromRows({{0, 0}, {1, 0}, {0, 1}, {0, 1}})});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonVertexPoint);
  }
}

TEST_CASE("matroid hyperplanes of the square are its six lines") {
  const auto hs = matroidHyperplanes(square());
  CHECK(hs.size() == 6);
  for (const auto& h : hs) {
    CHECK(h.incident.size() == 2);
    for (std::size_t i : h.incident) CHECK(h.slack(pointRow(square(), i)).isZero());
  }
}

TEST_CASE("matroid hyperplanes of the prism") {
  const auto hs = matroidHyperplanes(prism());
  // every hyperplane spans rank 3 of the homogenized points and is closed
  for (const auto& h : hs) {
    CHECK(h.incident.size() >= 3);
    for (std::size_t i = 0; i < 6; ++i)
      CHECK(h.slack(pointRow(prism(), i)).isZero() ==
            std::binary_search(h.incident.begin(), h.incident.end(), i));
  }
  // facets are among the hyperplanes
  const auto facets = facetsFromVertices(prism());
  for (const auto& f : facets)
    CHECK(std::any_of(hs.begin(), hs.end(), [&](const AffineHyperplane& h) { return h.incident == f.incident; }));
}

TEST_CASE("Gale transform of the square") {
  const GaleTransform g = galeTransform(square());
  REQUIRE(g.matrix.rows() == 1);
  REQUIRE(g.matrix.cols() == 4);
  const Rational s = g.matrix(0, 0);
  CHECK(!s.isZero());
  CHECK(g.matrix(0, 1) == -s);
  CHECK(g.matrix(0, 2) == s);
  CHECK(g.matrix(0, 3) == -s);
}

TEST_CASE("Gale transform annihilates the homogenized points") {
  for (const PointConfiguration& v : {square(), prism(), cube()}) {
    const GaleTransform g = galeTransform(v);
    CHECK(g.matrix.rows() == v.size() - static_cast<std::size_t>(v.affineDimension()) - 1);
    const RationalMatrix prod = g.matrix * v.homogenized();
    for (const Rational& x : prod.entries()) CHECK(x.isZero());
  }
}

TEST_CASE("positive circuits of the square's Gale transform") {
  GaleTransform g{RationalMatrix::fromRows({{1, -1, 1, -1}})};
  const auto cs = positiveCircuits(g);
  REQUIRE(cs.size() == 4);
  const std::vector<std::vector<std::size_t>> supports{{0, 1}, {0, 3}, {1, 2}, {2, 3}};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(cs[k].support == supports[k]);
    CHECK(cs[k].coefficients == std::vector<Rational>{1, 1});
  }
}

TEST_CASE("Gale duality: facet complements carry positive circuits") {
  for (const PointConfiguration& v : {square(), prism(), cube()}) {
    const auto cs = positiveCircuits(galeTransform(v));
    for (const auto& f : facetsFromVertices(v)) {
      std::vector<std::size_t> complement;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!std::binary_search(f.incident.begin(), f.incident.end(), i)) complement.push_back(i);
      CHECK(std::any_of(cs.begin(), cs.end(), [&](const Circuit& c) { return c.support == complement; }));
    }
    for (const Circuit& c : cs)
      for (const Rational& x : c.coefficients) CHECK(x.sign() > 0);
  }
}

TEST_CASE("Pluecker coordinates") {
  const RationalMatrix g = RationalMatrix::fromRows({{1, -1, 1, -1}});
  const std::size_t one[] = {1};
  CHECK(pluecker(g, one) == -1);
  const RationalMatrix m = RationalMatrix::fromRows({{1, 2, 0}, {3, 4, 1}});
  const std::size_t ab[] = {0, 1}, ba[] = {1, 0};
  CHECK(pluecker(m, ab) == -2);
  CHECK(pluecker(m, ba) == 2);
  const std::size_t three[] = {0, 1, 2};
  try {
    (void)pluecker(m, three);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeMismatch);
  }
}

}
