#include "slackkit/geometry/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "slackkit/error.hpp"

namespace slackkit::geom {

namespace {

// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order;
// stops early when f returns false.
template <typename F>
void forEachSubset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!f(std::as_const(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].isZero() && !b[i].isZero()) s += a[i] * b[i];
  return s;
}

// Smallest positive integer multiple with coprime entries.
std::vector<Rational> primitive(std::span<const Rational> v) {
  mpz_class l = 1, g = 0;
  for (const Rational& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  for (const Rational& x : v) {
    ints.push_back(x.numerator() * (l / x.denominator()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  std::vector<Rational> out;
  for (const mpz_class& z : ints) out.emplace_back(g == 0 ? z : mpz_class(z / g));
  return out;
}

AffineHyperplane fromHomogeneous(std::span<const Rational> h, std::vector<std::size_t> incident) {
  // slack = h0 + h'.v = b - alpha.v
  AffineHyperplane hp;
  hp.offset = h[0];
  for (std::size_t i = 1; i < h.size(); ++i) hp.normal.push_back(-h[i]);
  hp.incident = std::move(incident);
  return hp;
}

void sortByIncidence(std::vector<AffineHyperplane>& hs) {
  std::sort(hs.begin(), hs.end(),
            [](const AffineHyperplane& a, const AffineHyperplane& b) { return a.incident < b.incident; });
}

}  // namespace

RationalMatrix PointConfiguration::homogenized() const {
  RationalMatrix h(points.rows(), points.cols() + 1);
  for (std::size_t i = 0; i < points.rows(); ++i) {
    h(i, 0) = 1;
    for (std::size_t j = 0; j < points.cols(); ++j) h(i, j + 1) = points(i, j);
  }
  return h;
}

long PointConfiguration::affineDimension() const {
  return static_cast<long>(exact::rank(homogenized())) - 1;
}

Rational AffineHyperplane::slack(std::span<const Rational> point) const {
  return offset - dot(normal, point);
}

std::vector<AffineHyperplane> facetsFromVertices(const PointConfiguration& v) {
  const std::size_t n = v.size();
  const std::size_t d = v.dimension();
  const RationalMatrix hm = v.homogenized();
  if (d == 0 || exact::rank(hm) != d + 1)
    throw Error(ErrorKind::NotFullDimensional,
                "affine span has dimension " + std::to_string(v.affineDimension()) + ", expected " +
                    std::to_string(d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::equal(hm.row(i).begin(), hm.row(i).end(), hm.row(j).begin()))
        throw Error(ErrorKind::NonVertexPoint, "points " + std::to_string(i) + " and " + std::to_string(j) +
                                                   " coincide");

  std::vector<AffineHyperplane> facets;
  std::vector<std::vector<bool>> onFacet;
  forEachSubset(n, d, [&](const std::vector<std::size_t>& subset) {
    for (const auto& mask : onFacet)
      if (std::all_of(subset.begin(), subset.end(), [&](std::size_t i) { return mask[i]; })) return true;
    const RationalMatrix ker = exact::kernelBasis(hm.selectRows(subset));
    if (ker.rows() != 1) return true;
    std::vector<Rational> h = primitive(ker.row(0));
    int sign = 0;
    bool mixed = false;
    std::vector<std::size_t> incident;
    for (std::size_t i = 0; i < n && !mixed; ++i) {
      const int s = dot(hm.row(i), h).sign();
      if (s == 0) {
        incident.push_back(i);
      } else if (sign == 0) {
        sign = s;
      } else if (s != sign) {
        mixed = true;
      }
    }
    if (mixed || sign == 0) return true;
    if (sign < 0)
      for (Rational& x : h) x = -x;
    std::vector<bool> mask(n, false);
    for (std::size_t i : incident) mask[i] = true;
    onFacet.push_back(std::move(mask));
    facets.push_back(fromHomogeneous(h, std::move(incident)));
    return true;
  });

  // a vertex is cut out by the facets through it
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> through;
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (onFacet[f][i]) through.push_back(f);
    RationalMatrix normals(through.size(), d);
    for (std::size_t r = 0; r < through.size(); ++r)
      for (std::size_t c = 0; c < d; ++c) normals(r, c) = facets[through[r]].normal[c];
    if (exact::rank(normals) != d)
      throw Error(ErrorKind::NonVertexPoint, "point " + std::to_string(i) + " is not a vertex of the hull");
  }
  sortByIncidence(facets);
  return facets;
}

std::vector<AffineHyperplane> matroidHyperplanes(const PointConfiguration& v) {
  const std::size_t n = v.size();
  const RationalMatrix hm = v.homogenized();
  std::vector<std::size_t> cols;
  exact::reducedRowEchelon(hm, &cols);
  const std::size_t r = cols.size();
  if (r == 0) return {};
  const RationalMatrix proj = hm.selectColumns(cols);

  std::vector<AffineHyperplane> out;
  std::set<std::vector<std::size_t>> seen;
  forEachSubset(n, r - 1, [&](const std::vector<std::size_t>& subset) {
    const RationalMatrix ker = exact::kernelBasis(proj.selectRows(subset));
    if (ker.rows() != 1) return true;
    std::vector<std::size_t> incident;
    for (std::size_t i = 0; i < n; ++i)
      if (dot(proj.row(i), ker.row(0)).isZero()) incident.push_back(i);
    if (!seen.insert(incident).second) return true;
    std::vector<Rational> h(hm.cols(), Rational(0));
    for (std::size_t k = 0; k < r; ++k) h[cols[k]] = ker(0, k);
    out.push_back(fromHomogeneous(h, std::move(incident)));
    return true;
  });
  sortByIncidence(out);
  return out;
}

GaleTransform galeTransform(const PointConfiguration& v) {
  return GaleTransform{exact::kernelBasis(v.homogenized().transposed())};
}

std::vector<Circuit> positiveCircuits(const GaleTransform& g) {
  const RationalMatrix& m = g.matrix;
  const std::size_t n = m.cols();
  const std::size_t r = exact::rank(m);
  std::vector<Circuit> out;
  for (std::size_t k = 1; k <= std::min(n, r + 1); ++k) {
    forEachSubset(n, k, [&](const std::vector<std::size_t>& subset) {
      const RationalMatrix ker = exact::kernelBasis(m.selectColumns(subset));
      if (ker.rows() != 1) return true;
      const int s0 = ker(0, 0).sign();
      for (std::size_t i = 0; i < k; ++i)
        if (ker(0, i).sign() != s0 || s0 == 0) return true;
      Circuit c;
      c.support = subset;
      const Rational scale = ker(0, 0).inverse();
      for (std::size_t i = 0; i < k; ++i) c.coefficients.push_back(ker(0, i) * scale);
      out.push_back(std::move(c));
      return true;
    });
  }
  std::sort(out.begin(), out.end(), [](const Circuit& a, const Circuit& b) { return a.support < b.support; });
  return out;
}

Rational pluecker(const RationalMatrix& m, std::span<const std::size_t> cols) {
  if (cols.size() != m.rows())
    throw Error(ErrorKind::SizeMismatch, std::to_string(cols.size()) + " columns for " + std::to_string(m.rows()) +
                                             " rows");
  for (std::size_t c : cols)
    if (c >= m.cols()) throw Error(ErrorKind::SizeMismatch, "column index out of range");
  return exact::det(m.selectColumns(cols));
}

}  // namespace slackkit::geom
