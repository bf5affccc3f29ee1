#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "slackkit/error.hpp"
#include "slackkit/groebner/groebner.hpp"

namespace slackkit::gb {

using poly::Rational;
using poly::Term;

namespace {

using TermList = std::vector<Term>;

bool traceEnabled() {
  static const bool on = std::getenv("SLACKKIT_TRACE") != nullptr;
  return on;
}

TermList sortedTerms(const Polynomial& p, const MonomialOrder& order) { return p.termsIn(order); }

// f[fStart..] - c * q * g[gStart..], both descending in `order`.
TermList subtractMultiple(const TermList& f, std::size_t fStart, const Rational& c, const Monomial& q,
                          const TermList& g, std::size_t gStart, const MonomialOrder& order) {
  TermList out;
  out.reserve(f.size() - fStart + g.size() - gStart);
  std::size_t i = fStart, j = gStart;
  Monomial qg;
  bool haveQg = false;
  while (i < f.size() && j < g.size()) {
    if (!haveQg) {
      qg = q * g[j].monomial;
      haveQg = true;
    }
    const auto cmp = order.compare(f[i].monomial, qg);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{std::move(qg), -(c * g[j].coefficient)});
      ++j;
      haveQg = false;
    } else {
      Rational s = f[i].coefficient - c * g[j].coefficient;
      if (!s.isZero()) out.push_back(Term{std::move(qg), std::move(s)});
      ++i;
      ++j;
      haveQg = false;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j) out.push_back(Term{q * g[j].monomial, -(c * g[j].coefficient)});
  return out;
}

void makeMonic(TermList& f) {
  if (f.empty() || f.front().coefficient.isOne()) return;
  const Rational inv = f.front().coefficient.inverse();
  for (Term& t : f) t.coefficient *= inv;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t sugar;
  bool dead = false;
};

// Heap comparator: lowest sugar first, then smallest lcm.
struct PairRank {
  const MonomialOrder* order;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar > b.sugar;
    return order->compare(a.lcm, b.lcm) > 0;
  }
};

class Engine {
 public:
  Engine(std::size_t nvars, const MonomialOrder& order, const GroebnerOptions& options)
      : nvars_(nvars), order_(order) {
    std::vector<std::uint32_t> mask(nvars, 0);
    for (std::size_t v : options.strippable) {
      if (v >= nvars) throw Error(ErrorKind::UniverseMismatch, "strippable variable outside ring");
      mask[v] = 1;
    }
    strippable_ = mask;
    stripAny_ = std::any_of(mask.begin(), mask.end(), [](std::uint32_t b) { return b != 0; });
  }

  void addGenerator(const Polynomial& g) {
    TermList h = topReduce(sortedTerms(g, order_));
    if (h.empty()) return;
    const std::uint32_t sugar = g.totalDegree();
    insert(std::move(h), sugar);
    run();
  }

  std::vector<Polynomial> reducedBasis() {
    std::vector<Polynomial> out;
    out.reserve(active_.size());
    for (std::size_t idx : active_) {
      const TermList& g = polys_[idx].terms;
      TermList tail(g.begin() + 1, g.end());
      TermList reducedTail = reduce(std::move(tail));
      std::vector<Term> terms;
      terms.reserve(reducedTail.size() + 1);
      terms.push_back(g.front());
      for (Term& t : reducedTail) terms.push_back(std::move(t));
      out.push_back(Polynomial::fromTerms(nvars_, std::move(terms)));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order_.compare(a.leadingTerm(order_).monomial, b.leadingTerm(order_).monomial) > 0;
    });
    return out;
  }

  // leading-term reduction only; tails are cleaned up in reducedBasis
  TermList topReduce(TermList f) const {
    while (!f.empty()) {
      const Term& lt = f.front();
      const std::size_t r = findReducer(lt.monomial);
      if (r == npos) break;
      const TermList& g = polys_[r].terms;
      const Monomial q = lt.monomial / g.front().monomial;
      const Rational c = lt.coefficient;  // g is monic
      f = subtractMultiple(f, 1, c, q, g, 1, order_);
    }
    return f;
  }

  // full reduction against the active set
  TermList reduce(TermList f) const {
    TermList result;
    std::size_t start = 0;
    while (start < f.size()) {
      const Term& lt = f[start];
      const std::size_t r = findReducer(lt.monomial);
      if (r == npos) {
        result.push_back(std::move(f[start]));
        ++start;
        continue;
      }
      const TermList& g = polys_[r].terms;
      const Monomial q = lt.monomial / g.front().monomial;
      const Rational c = lt.coefficient;  // g is monic
      f = subtractMultiple(f, start + 1, c, q, g, 1, order_);
      start = 0;
      ++reductionSteps_;
    }
    return result;
  }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  struct Entry {
    TermList terms;
    std::uint32_t sugar;
  };

  std::size_t findReducer(const Monomial& m) const {
    std::size_t best = npos;
    for (std::size_t idx : active_) {
      const Monomial& lm = polys_[idx].terms.front().monomial;
      if (!divides(lm, m)) continue;
      if (best == npos || polys_[idx].terms.size() < polys_[best].terms.size()) best = idx;
    }
    return best;
  }

  void strip(TermList& h, std::uint32_t& sugar) const {
    if (!stripAny_ || h.empty()) return;
    std::vector<std::uint32_t> e(nvars_, 0);
    bool any = false;
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (!strippable_[v]) continue;
      std::uint32_t m = std::numeric_limits<std::uint32_t>::max();
      for (const Term& t : h) {
        m = std::min<std::uint32_t>(m, t.monomial.exponent(v));
        if (m == 0) break;
      }
      e[v] = m;
      any |= m > 0;
    }
    if (!any) return;
    const Monomial common = Monomial::fromExponents(e);
    for (Term& t : h) t.monomial = t.monomial / common;
    sugar = sugar >= common.degree() ? sugar - common.degree() : 0;
  }

  void insert(TermList h, std::uint32_t sugar) {
    strip(h, sugar);
    makeMonic(h);
    const std::size_t k = polys_.size();
    const Monomial lmH = h.front().monomial;
    polys_.push_back(Entry{std::move(h), sugar});

    // Gebauer-Möller update
    std::vector<Pair> candidates;
    candidates.reserve(active_.size());
    for (std::size_t i : active_) {
      const Monomial& lmI = polys_[i].terms.front().monomial;
      Monomial l = lcm(lmI, lmH);
      const std::uint32_t s = std::max(polys_[i].sugar + l.degree() - lmI.degree(),
                                       polys_[k].sugar + l.degree() - lmH.degree());
      candidates.push_back(Pair{i, k, std::move(l), s});
    }
    // Divisors of an lcm have no larger degree, so after ordering by degree
    // a candidate only needs checking against the pairs already kept: a
    // dropped pair's lcm is itself a multiple of a kept one.
    std::vector<std::size_t> byDegree(candidates.size());
    for (std::size_t a = 0; a < byDegree.size(); ++a) byDegree[a] = a;
    std::stable_sort(byDegree.begin(), byDegree.end(), [&](std::size_t a, std::size_t b) {
      return candidates[a].lcm.degree() < candidates[b].lcm.degree();
    });
    std::vector<std::size_t> kept;
    for (std::size_t a : byDegree) {
      bool redundant = false;
      for (std::size_t b : kept)
        if (divides(candidates[b].lcm, candidates[a].lcm)) {
          redundant = true;
          break;
        }
      if (!redundant) kept.push_back(a);
    }

    // chain criterion on the old pairs; dropped pairs stay in the heap, dead
    for (Pair& p : pairs_) {
      if (p.dead || !divides(lmH, p.lcm)) continue;
      p.dead = !(lcm(polys_[p.i].terms.front().monomial, lmH) == p.lcm) &&
               !(lcm(polys_[p.j].terms.front().monomial, lmH) == p.lcm);
      liveOnes_ -= p.dead;
    }
    // kept pairs with coprime leading terms reduce to zero
    for (std::size_t a : kept) {
      const Monomial& lmI = polys_[candidates[a].i].terms.front().monomial;
      if (coprime(lmI, lmH)) continue;
      pairs_.push_back(std::move(candidates[a]));
      std::push_heap(pairs_.begin(), pairs_.end(), worse_);
      ++liveOnes_;
    }

    std::vector<std::size_t> nextActive;
    nextActive.reserve(active_.size() + 1);
    for (std::size_t i : active_)
      if (!divides(lmH, polys_[i].terms.front().monomial)) nextActive.push_back(i);
    nextActive.push_back(k);
    active_ = std::move(nextActive);
  }

  TermList sPoly(const Pair& p) const {
    const TermList& f = polys_[p.i].terms;
    const TermList& g = polys_[p.j].terms;
    // both monic: (l/lm f) f - (l/lm g) g, leading terms cancel
    const Monomial qf = p.lcm / f.front().monomial;
    const Monomial qg = p.lcm / g.front().monomial;
    TermList a;
    a.reserve(f.size() - 1);
    for (std::size_t t = 1; t < f.size(); ++t) a.push_back(Term{qf * f[t].monomial, f[t].coefficient});
    return subtractMultiple(a, 0, Rational(1), qg, g, 1, order_);
  }

  void run() {
    while (!pairs_.empty()) {
      std::pop_heap(pairs_.begin(), pairs_.end(), worse_);
      Pair p = std::move(pairs_.back());
      pairs_.pop_back();
      if (p.dead) continue;
      --liveOnes_;
      TermList h = topReduce(sPoly(p));
      ++pairsProcessed_;
      if (h.empty()) continue;
      insert(std::move(h), p.sugar);
      if (traceEnabled() && polys_.size() % 50 == 0)
        std::fprintf(stderr, "[gb] basis=%zu active=%zu pairs=%zu processed=%zu sugar=%u\n",
                     polys_.size(), active_.size(), liveOnes_, pairsProcessed_, p.sugar);
    }
  }

  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<std::uint32_t> strippable_;
  bool stripAny_ = false;
  std::vector<Entry> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;  // heap, best pair on top
  PairRank worse_{&order_};
  std::size_t liveOnes_ = 0;
  std::size_t pairsProcessed_ = 0;
  mutable std::size_t reductionSteps_ = 0;
};

std::size_t commonUniverse(std::span<const Polynomial> ps) {
  if (ps.empty()) return 0;
  const std::size_t n = ps.front().nvars();
  for (const Polynomial& p : ps)
    if (p.nvars() != n) throw Error(ErrorKind::UniverseMismatch, "generators live in different rings");
  return n;
}

}  // namespace

Polynomial normalForm(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& order) {
  if (f.isZero()) return f;
  for (const Polynomial& g : divisors)
    if (g.nvars() != f.nvars()) throw Error(ErrorKind::UniverseMismatch, "divisor outside ring");
  // plain division: divisors are used as given, not completed to a basis
  std::vector<TermList> gs;
  std::vector<Rational> lcInv;
  for (const Polynomial& g : divisors) {
    if (g.isZero()) continue;
    gs.push_back(g.termsIn(order));
    lcInv.push_back(gs.back().front().coefficient.inverse());
  }
  TermList h = f.termsIn(order);
  TermList result;
  std::size_t start = 0;
  while (start < h.size()) {
    const Term& lt = h[start];
    std::size_t r = gs.size();
    for (std::size_t k = 0; k < gs.size(); ++k)
      if (divides(gs[k].front().monomial, lt.monomial)) {
        r = k;
        break;
      }
    if (r == gs.size()) {
      result.push_back(h[start]);
      ++start;
      continue;
    }
    const Monomial q = lt.monomial / gs[r].front().monomial;
    const Rational c = lt.coefficient * lcInv[r];
    h = subtractMultiple(h, start + 1, c, q, gs[r], 1, order);
    start = 0;
  }
  return Polynomial::fromTerms(f.nvars(), std::move(result));
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                                   const GroebnerOptions& options) {
  const std::size_t nvars = commonUniverse(generators);
  std::vector<const Polynomial*> gens;
  for (const Polynomial& g : generators)
    if (!g.isZero()) gens.push_back(&g);
  if (gens.empty()) return {};

  // smallest generators first: low degree, then smaller leading term
  std::stable_sort(gens.begin(), gens.end(), [&](const Polynomial* a, const Polynomial* b) {
    if (a->totalDegree() != b->totalDegree()) return a->totalDegree() < b->totalDegree();
    if (a->size() != b->size()) return a->size() < b->size();
    return order.compare(a->leadingTerm(order).monomial, b->leadingTerm(order).monomial) < 0;
  });

  const auto started = std::chrono::steady_clock::now();
  Engine engine(nvars, order, options);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    engine.addGenerator(*gens[k]);
    if (traceEnabled() && (k + 1) % 500 == 0)
      std::fprintf(stderr, "[gb] inserted %zu/%zu generators\n", k + 1, gens.size());
  }
  auto basis = engine.reducedBasis();
  if (traceEnabled())
    std::fprintf(stderr, "[gb] done: %zu generators -> %zu basis elements in %.2fs (%s)\n", gens.size(),
                 basis.size(),
                 std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count(),
                 order.descriptor().c_str());
  return basis;
}

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const Term lf = f.leadingTerm(order);
  const Term lg = g.leadingTerm(order);
  const Monomial l = lcm(lf.monomial, lg.monomial);
  return f.times(l / lf.monomial).scaled(lf.coefficient.inverse()) -
         g.times(l / lg.monomial).scaled(lg.coefficient.inverse());
}

}  // namespace slackkit::gb
