#include "slackkit/exactmath/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "slackkit/error.hpp"

namespace slackkit::exact {

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
    : value_(numerator, denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  value_.canonicalize();
}

namespace {

bool allDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view token) {
  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                          : body.substr(slash + 1);
  if (!allDigits(num) || !allDigits(den))
    throw Error(ErrorKind::BadRational, "'" + std::string(token) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::BadRational, "'" + std::string(token) + "' has zero denominator");
  if (negative) n = -n;
  return Rational(n, d);
}

Rational Rational::inverse() const {
  if (isZero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::toString() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::size_t hashValue(const Rational& r) {
  const std::size_t h1 = mpz_get_ui(r.numerator().get_mpz_t());
  const std::size_t h2 = mpz_get_ui(r.denominator().get_mpz_t());
  return h1 * 1000003u ^ h2 ^ static_cast<std::size_t>(r.sign() + 1);
}

}  // namespace slackkit::exact
