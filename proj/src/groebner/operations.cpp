#include <algorithm>
#include <cstdio>
#include <cstdlib>

#include "slackkit/error.hpp"
#include "slackkit/groebner/ideal.hpp"

namespace slackkit::gb {

namespace {

bool isMonomial(const Polynomial& f) { return f.size() == 1; }

std::vector<Polynomial> lift(std::span<const Polynomial> ps, std::size_t nvars) {
  std::vector<Polynomial> out;
  out.reserve(ps.size() + 1);
  for (const Polynomial& p : ps) out.push_back(p.withUniverse(nvars));
  return out;
}

// Elements of a block-order basis that avoid every eliminated variable,
// moved back into the smaller ring. For a t-last extension the survivors are
// the reduced grevlex basis of the elimination ideal.
std::vector<Polynomial> survivors(const std::vector<Polynomial>& basis, std::span<const std::size_t> eliminated,
                                  std::size_t nvars) {
  std::vector<Polynomial> out;
  for (const Polynomial& g : basis) {
    bool free = true;
    for (std::size_t v : eliminated)
      if (g.involves(v)) {
        free = false;
        break;
      }
    if (free) out.push_back(g.withUniverse(nvars));
  }
  return out;
}

Ideal packageResult(std::size_t nvars, std::vector<Polynomial> grevlexBasis, const MonomialOrder& order) {
  if (order.kind() == MonomialOrder::Kind::GRevLex)
    return Ideal::fromReducedBasis(nvars, std::move(grevlexBasis), order);
  return Ideal(nvars, std::move(grevlexBasis), order);
}

// Reduced grevlex basis of (<gens> + <1 - t f>) ∩ Q[x] in the ring with t
// appended; `strip` lists variables that may be divided out.
std::vector<Polynomial> rabinowitsch(std::span<const Polynomial> gens, const Polynomial& f, std::size_t nvars,
                                     std::vector<std::size_t> strip) {
  const std::size_t t = nvars;
  std::vector<Polynomial> ext = lift(gens, nvars + 1);
  const Polynomial fExt = f.withUniverse(nvars + 1);
  ext.push_back(Polynomial::constant(nvars + 1, 1) - Polynomial::variable(nvars + 1, t) * fExt);
  strip.push_back(t);
  const std::size_t front[] = {t};
  const auto basis = buchberger(ext, MonomialOrder::block(nvars + 1, front), GroebnerOptions{strip});
  return survivors(basis, front, nvars);
}

bool homogeneous(std::span<const Polynomial> gens) {
  for (const Polynomial& g : gens)
    for (const auto& t : g.terms())
      if (t.monomial.degree() != g.terms().front().monomial.degree()) return false;
  return true;
}

Polynomial swapVariables(const Polynomial& p, std::size_t a, std::size_t b) {
  if (a == b) return p;
  std::vector<poly::Term> terms;
  std::vector<std::uint32_t> exps(p.nvars());
  for (const auto& t : p.terms()) {
    for (std::size_t v = 0; v < exps.size(); ++v) exps[v] = t.monomial.exponent(v);
    std::swap(exps[a], exps[b]);
    terms.push_back({Monomial::fromExponents(exps), t.coefficient});
  }
  return Polynomial::fromTerms(p.nvars(), std::move(terms));
}

// For homogeneous input: a grevlex basis built while dividing out variable
// factors has no leading term divisible by the last variable, and for
// homogeneous ideals that means the ideal is saturated by it. Each variable
// takes its turn in last place.
std::vector<Polynomial> saturateHomogeneous(std::vector<Polynomial> basis, std::span<const std::size_t> strip,
                                            std::size_t n) {
  const std::vector<std::size_t> s(strip.begin(), strip.end());
  const std::size_t last = n - 1;
  for (std::size_t v : strip) {
    if (basis.empty() || (basis.size() == 1 && basis.front().isConstant())) break;
    if (std::none_of(basis.begin(), basis.end(), [&](const Polynomial& g) { return g.involves(v); })) continue;
    for (Polynomial& g : basis) g = swapVariables(g, v, last);
    std::vector<std::size_t> swapped = s;
    for (std::size_t& w : swapped) w = w == v ? last : w == last ? v : w;
    basis = buchberger(basis, MonomialOrder::grevlex(), GroebnerOptions{swapped});
    for (Polynomial& g : basis) g = swapVariables(g, v, last);
  }
  return buchberger(basis, MonomialOrder::grevlex(), GroebnerOptions{s});
}

// Saturation of <gens> by every variable in `strip` (sorted), as a reduced
// grevlex basis.
std::vector<Polynomial> saturateAll(std::span<const Polynomial> gens, std::span<const std::size_t> strip,
                                    std::size_t n) {
  if (homogeneous(gens)) return saturateHomogeneous({gens.begin(), gens.end()}, strip, n);
  // Dividing variable factors out of basis elements stays inside
  // I : (prod x_v)^∞, and every later step saturates, so the final result is
  // exact.
  std::vector<std::size_t> s(strip.begin(), strip.end());
  std::vector<Polynomial> basis = buchberger(gens, MonomialOrder::grevlex(), GroebnerOptions{s});
  for (std::size_t v : strip) {
    if (basis.empty()) break;
    if (basis.size() == 1 && basis.front().isConstant()) break;
    const bool involved = std::any_of(basis.begin(), basis.end(), [&](const Polynomial& g) { return g.involves(v); });
    // x_v is a nonzerodivisor modulo an ideal generated without it
    if (!involved) continue;
    basis = rabinowitsch(basis, Polynomial::variable(n, v), n, s);
  }
  return basis;
}

constexpr std::size_t kRoundSize = 16;

bool traceOn() {
  static const bool on = std::getenv("SLACKKIT_TRACE") != nullptr;
  return on;
}

// f divided by the largest monomial in `vars` that divides it.
Polynomial stripFactors(const Polynomial& f, std::span<const std::size_t> vars) {
  const Monomial content = f.contentMonomial();
  std::vector<std::uint32_t> exps(f.nvars(), 0);
  bool any = false;
  for (std::size_t v : vars)
    if (content.exponent(v) > 0) {
      exps[v] = content.exponent(v);
      any = true;
    }
  return any ? f.dividedBy(Monomial::fromExponents(exps)) : f;
}

}  // namespace

Ideal saturateByVariables(const Ideal& ideal, std::span<const std::size_t> vars) {
  const std::size_t n = ideal.nvars();
  std::vector<std::size_t> strip(vars.begin(), vars.end());
  std::sort(strip.begin(), strip.end());
  strip.erase(std::unique(strip.begin(), strip.end()), strip.end());
  for (std::size_t v : strip)
    if (v >= n) throw Error(ErrorKind::UniverseMismatch, "saturation variable outside ring");

  // Generators are added in rounds: everything left is reduced modulo the
  // current saturated basis, stripped of variable factors, and the
  // lowest-degree survivors are added before saturating again. Determinantal
  // ideals have many generators that become redundant after saturation, so
  // this stays far smaller than saturating all of them at once.
  const MonomialOrder grevlex = MonomialOrder::grevlex();
  std::vector<Polynomial> pending = ideal.generators();
  std::vector<Polynomial> basis;
  while (true) {
    std::vector<Polynomial> next;
    for (const Polynomial& g : pending) {
      Polynomial r = normalForm(g, basis, grevlex);
      if (r.isZero()) continue;
      next.push_back(stripFactors(r, strip));
    }
    if (next.empty()) break;
    std::stable_sort(next.begin(), next.end(), [](const Polynomial& a, const Polynomial& b) {
      if (a.totalDegree() != b.totalDegree()) return a.totalDegree() < b.totalDegree();
      return a.size() < b.size();
    });
    std::size_t take = 0;
    while (take < next.size() && take < kRoundSize && next[take].totalDegree() == next[0].totalDegree()) ++take;
    basis.insert(basis.end(), next.begin(), next.begin() + static_cast<std::ptrdiff_t>(take));
    pending.assign(next.begin() + static_cast<std::ptrdiff_t>(take), next.end());
    basis = saturateAll(basis, strip, n);
    if (traceOn())
      std::fprintf(stderr, "[sat] added %zu, basis %zu, pending %zu\n", take, basis.size(), pending.size());
    if (basis.size() == 1 && basis.front().isConstant()) break;
  }
  return packageResult(n, std::move(basis), ideal.order());
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  if (f.isZero()) throw Error(ErrorKind::ZeroDivisorPolynomial, "cannot saturate by 0");
  if (f.nvars() != ideal.nvars()) throw Error(ErrorKind::UniverseMismatch, "saturating polynomial outside ring");
  const std::size_t n = ideal.nvars();
  if (ideal.generators().empty() || f.isConstant()) return ideal;
  // t f = 1 modulo the extended ideal, so t and the variables of a monomial
  // f are units there
  std::vector<std::size_t> strip;
  if (isMonomial(f)) strip = f.variables();
  return packageResult(n, rabinowitsch(ideal.basis(), f, n, strip), ideal.order());
}

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> vars) {
  const std::size_t n = ideal.nvars();
  if (vars.empty()) return Ideal::fromReducedBasis(n, ideal.basis(), ideal.order());
  const auto basis = buchberger(ideal.generators(), MonomialOrder::block(n, vars));
  // the block order restricted to the remaining variables is grevlex
  return packageResult(n, survivors(basis, vars, n), ideal.order());
}

bool idealEquals(const Ideal& a, const Ideal& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorKind::UniverseMismatch, "ideals in different rings");
  const auto& ga = a.basis();
  const Ideal other = b.withOrder(a.order());
  const auto& gb = other.basis();
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (!(ga[i] == gb[i])) return false;
  return true;
}

bool radicalMembership(const Polynomial& f, const Ideal& ideal) {
  if (f.nvars() != ideal.nvars()) throw Error(ErrorKind::UniverseMismatch, "polynomial outside ring");
  if (f.isZero() || ideal.contains(f)) return true;
  const std::size_t n = ideal.nvars();
  std::vector<Polynomial> ext = lift(ideal.basis(), n + 1);
  ext.push_back(Polynomial::constant(n + 1, 1) -
                Polynomial::variable(n + 1, n) * f.withUniverse(n + 1));
  std::vector<std::size_t> strip{n};
  if (isMonomial(f))
    for (std::size_t v : f.variables()) strip.push_back(v);
  const auto basis = buchberger(ext, MonomialOrder::grevlex(), GroebnerOptions{strip});
  return basis.size() == 1 && basis.front().isConstant();
}

}  // namespace slackkit::gb
