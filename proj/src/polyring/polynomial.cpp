#include "slackkit/polyring/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "slackkit/error.hpp"

namespace slackkit::poly {

namespace {

const MonomialOrder& canonicalOrder() {
  static const MonomialOrder order = MonomialOrder::grevlex();
  return order;
}

void checkUniverse(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars())
    throw Error(ErrorKind::UniverseMismatch,
                std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) + " variables");
}

// Merge of two descending term lists with signs: a + sign * b.
std::vector<Term> mergeTerms(std::span<const Term> a, std::span<const Term> b, bool subtract) {
  const MonomialOrder& order = canonicalOrder();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const auto c = order.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{b[j].monomial, -b[j].coefficient} : b[j]);
      ++j;
    } else {
      Rational s = subtract ? a[i].coefficient - b[j].coefficient : a[i].coefficient + b[j].coefficient;
      if (!s.isZero()) out.push_back(Term{a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(subtract ? Term{b[j].monomial, -b[j].coefficient} : b[j]);
  return out;
}

}  // namespace

void normalizeTerms(std::vector<Term>& terms, const MonomialOrder& order) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < terms.size();) {
    Rational c = terms[r].coefficient;
    std::size_t s = r + 1;
    while (s < terms.size() && terms[s].monomial == terms[r].monomial) c += terms[s++].coefficient;
    if (!c.isZero()) {
      if (w != r) terms[w].monomial = std::move(terms[r].monomial);
      terms[w].coefficient = std::move(c);
      ++w;
    }
    r = s;
  }
  terms.resize(w);
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (!c.isZero()) p.terms_.push_back(Term{Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  return monomial(Monomial::variable(nvars, index));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  if (!c.isZero()) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::fromTerms(std::size_t nvars, std::vector<Term> terms) {
  for (const Term& t : terms)
    if (t.monomial.nvars() != nvars) throw Error(ErrorKind::UniverseMismatch, "term outside ring");
  Polynomial p(nvars);
  normalizeTerms(terms, canonicalOrder());
  p.terms_ = std::move(terms);
  return p;
}

std::uint32_t Polynomial::totalDegree() const {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

std::vector<Term> Polynomial::termsIn(const MonomialOrder& order) const {
  std::vector<Term> out = terms_;
  if (order.kind() != MonomialOrder::Kind::GRevLex)
    std::stable_sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
      return order.compare(a.monomial, b.monomial) > 0;
    });
  return out;
}

Term Polynomial::leadingTerm(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  if (order.kind() == MonomialOrder::Kind::GRevLex) return terms_.front();
  const Term* best = &terms_.front();
  for (const Term& t : terms_)
    if (order.compare(t.monomial, best->monomial) > 0) best = &t;
  return *best;
}

std::vector<std::size_t> Polynomial::variables() const {
  std::vector<bool> seen(nvars_, false);
  for (const Term& t : terms_)
    for (std::size_t v = 0; v < nvars_; ++v)
      if (t.monomial.exponent(v)) seen[v] = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars_; ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

bool Polynomial::involves(std::size_t var) const {
  for (const Term& t : terms_)
    if (var < nvars_ && t.monomial.exponent(var)) return true;
  return false;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  checkUniverse(a, b);
  Polynomial p(a.nvars_);
  p.terms_ = mergeTerms(a.terms_, b.terms_, false);
  return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  checkUniverse(a, b);
  Polynomial p(a.nvars_);
  p.terms_ = mergeTerms(a.terms_, b.terms_, true);
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  checkUniverse(a, b);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_) prod.push_back(Term{s.monomial * t.monomial, s.coefficient * t.coefficient});
  Polynomial p(a.nvars_);
  normalizeTerms(prod, canonicalOrder());
  p.terms_ = std::move(prod);
  return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.isZero()) return Polynomial(nvars_);
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coefficient *= c;
  return p;
}

Polynomial Polynomial::times(const Monomial& m) const {
  if (m.nvars() != nvars_) throw Error(ErrorKind::UniverseMismatch, "monomial outside ring");
  Polynomial p(nvars_);
  p.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves any term order
  for (const Term& t : terms_) p.terms_.push_back(Term{t.monomial * m, t.coefficient});
  return p;
}

Polynomial Polynomial::dividedBy(const Monomial& m) const {
  Polynomial p(nvars_);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    if (!divides(m, t.monomial)) throw std::logic_error("dividedBy: monomial does not divide every term");
    p.terms_.push_back(Term{t.monomial / m, t.coefficient});
  }
  return p;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  return scaled(leadingTerm(order).coefficient.inverse());
}

Monomial Polynomial::contentMonomial() const {
  if (terms_.empty()) return Monomial(nvars_);
  Monomial g = terms_.front().monomial;
  for (const Term& t : terms_) {
    if (g.isOne()) break;
    g = gcd(g, t.monomial);
  }
  return g;
}

Polynomial Polynomial::withVariablesSetToOne(std::span<const std::size_t> vars) const {
  std::vector<bool> drop(nvars_, false);
  for (std::size_t v : vars) {
    if (v >= nvars_) throw Error(ErrorKind::UniverseMismatch, "variable outside ring");
    drop[v] = true;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    std::vector<std::uint32_t> e(nvars_);
    for (std::size_t v = 0; v < nvars_; ++v) e[v] = drop[v] ? 0 : t.monomial.exponent(v);
    out.push_back(Term{Monomial::fromExponents(e), t.coefficient});
  }
  return fromTerms(nvars_, std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw Error(ErrorKind::UniverseMismatch, "evaluation point size");
  Rational sum = 0;
  for (const Term& t : terms_) {
    Rational v = t.coefficient;
    for (const auto& [var, e] : t.monomial.support()) {
      mpq_class pw;
      mpz_pow_ui(pw.get_num_mpz_t(), point[var].numerator().get_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), point[var].denominator().get_mpz_t(), e);
      v *= Rational(pw);
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::withUniverse(std::size_t nvars) const {
  Polynomial p(nvars);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back(Term{t.monomial.withUniverse(nvars), t.coefficient});
  // grevlex comparisons ignore trailing zero lanes, so the order is unchanged
  return p;
}

std::string Polynomial::toString(const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  const std::vector<Term> sorted = termsIn(order);
  std::string out;
  bool first = true;
  for (const Term& t : sorted) {
    const bool negative = t.coefficient.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = t.coefficient.abs();
    std::string mono;
    for (const auto& [v, e] : t.monomial.support()) {
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += mag.toString();
    } else {
      if (!mag.isOne()) out += mag.toString() + "*";
      out += mono;
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  return true;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars) : s_(text), nvars_(nvars) {}

  Polynomial run() {
    std::vector<Term> terms;
    skipSpace();
    if (pos_ == s_.size()) fail("empty input");
    bool firstTerm = true;
    while (true) {
      skipSpace();
      if (pos_ == s_.size()) break;
      bool negative = false;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        negative = s_[pos_] == '-';
        ++pos_;
        skipSpace();
      } else if (!firstTerm) {
        fail("expected '+' or '-'");
      }
      terms.push_back(term(negative));
      firstTerm = false;
    }
    return Polynomial::fromTerms(nvars_, std::move(terms));
  }

 private:
  Term term(bool negative) {
    Rational coeff = 1;
    Monomial mono(nvars_);
    bool sawFactor = false;
    while (true) {
      skipSpace();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
        coeff *= Rational::parse(s_.substr(start, pos_ - start));
      } else if (pos_ < s_.size() && s_[pos_] == 'x') {
        ++pos_;
        const std::size_t var = number();
        if (var >= nvars_) fail("variable x" + std::to_string(var) + " outside ring of " + std::to_string(nvars_));
        std::uint32_t e = 1;
        skipSpace();
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          skipSpace();
          e = static_cast<std::uint32_t>(number());
        }
        mono.multiplyVariable(var, e);
      } else {
        fail(sawFactor ? "expected factor after '*'" : "expected coefficient or variable");
      }
      sawFactor = true;
      skipSpace();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (negative) coeff = -coeff;
    return Term{std::move(mono), std::move(coeff)};
  }

  std::size_t number() {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc{}) fail("expected a number");
    pos_ = static_cast<std::size_t>(p - s_.data());
    return v;
  }

  void skipSpace() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorKind::BadPolynomial,
                why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, std::size_t nvars) {
  try {
    return PolyParser(text, nvars).run();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BadRational) throw Error(ErrorKind::BadPolynomial, e.what());
    throw;
  }
}

}  // namespace slackkit::poly
