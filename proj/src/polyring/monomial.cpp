#include "slackkit/polyring/monomial.hpp"

#include <algorithm>

#include "slackkit/error.hpp"

namespace slackkit::poly {

namespace {
const simd::MonomialKernels& K() { return simd::activeKernels(); }

void checkUniverse(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw Error(ErrorKind::UniverseMismatch,
                std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) + " variables");
}
}  // namespace

Monomial::Monomial(std::size_t nvars)
    : nvars_(static_cast<std::uint32_t>(nvars)), lanes_(simd::paddedLanes(nvars), 0) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t exponent) {
  Monomial m(nvars);
  m.multiplyVariable(index, exponent);
  return m;
}

Monomial Monomial::fromExponents(std::span<const std::uint32_t> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 0xFFFFu) throw Error(ErrorKind::ExponentOverflow, "exponent too large");
    m.lanes_[i] = static_cast<Exponent>(exponents[i]);
  }
  m.refresh();
  return m;
}

void Monomial::refresh() {
  degree_ = lanes_.empty() ? 0 : K().degree(lanes_.data(), lanes_.size());
  divMask_ = 0;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (lanes_[i]) divMask_ |= std::uint64_t{1} << (i % 64);
}

std::vector<std::pair<std::size_t, std::uint32_t>> Monomial::support() const {
  std::vector<std::pair<std::size_t, std::uint32_t>> out;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (lanes_[i]) out.emplace_back(i, lanes_[i]);
  return out;
}

Monomial Monomial::withUniverse(std::size_t nvars) const {
  Monomial m(nvars);
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (!lanes_[i]) continue;
    if (i >= nvars)
      throw Error(ErrorKind::UniverseMismatch, "variable x" + std::to_string(i) + " outside ring");
    m.lanes_[i] = lanes_[i];
  }
  m.degree_ = degree_;
  m.divMask_ = divMask_;
  return m;
}

void Monomial::multiplyVariable(std::size_t var, std::uint32_t exponent) {
  if (var >= nvars_)
    throw Error(ErrorKind::UniverseMismatch, "variable x" + std::to_string(var) + " outside ring");
  const std::uint32_t e = lanes_[var] + exponent;
  if (e > 0xFFFFu) throw Error(ErrorKind::ExponentOverflow, "exponent of x" + std::to_string(var));
  lanes_[var] = static_cast<Exponent>(e);
  degree_ += exponent;
  if (e) divMask_ |= std::uint64_t{1} << (var % 64);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  checkUniverse(a, b);
  Monomial m(a.nvars_);
  if (!K().add(a.lanes_.data(), b.lanes_.data(), m.lanes_.data(), m.lanes_.size()))
    throw Error(ErrorKind::ExponentOverflow, "monomial product");
  m.degree_ = a.degree_ + b.degree_;
  m.divMask_ = a.divMask_ | b.divMask_;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  checkUniverse(a, b);
  Monomial m(a.nvars_);
  K().sub(a.lanes_.data(), b.lanes_.data(), m.lanes_.data(), m.lanes_.size());
  m.refresh();
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  checkUniverse(a, b);
  Monomial m(a.nvars_);
  K().lcm(a.lanes_.data(), b.lanes_.data(), m.lanes_.data(), m.lanes_.size());
  m.degree_ = m.lanes_.empty() ? 0 : K().degree(m.lanes_.data(), m.lanes_.size());
  m.divMask_ = a.divMask_ | b.divMask_;
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  checkUniverse(a, b);
  Monomial m(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) m.lanes_[i] = std::min(a.lanes_[i], b.lanes_[i]);
  m.refresh();
  return m;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.degree_ > b.degree_ || (a.divMask_ & ~b.divMask_)) return false;
  return K().divides(a.lanes_.data(), b.lanes_.data(), a.lanes_.size());
}

bool coprime(const Monomial& a, const Monomial& b) {
  if (!(a.divMask_ & b.divMask_)) return true;
  return K().coprime(a.lanes_.data(), b.lanes_.data(), a.lanes_.size());
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull ^ degree_;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= lanes_[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace slackkit::poly
