#include "slackkit/groebner/ideal.hpp"

#include "slackkit/error.hpp"

namespace slackkit::gb {

Ideal::Ideal(std::size_t nvars, std::vector<Polynomial> generators, MonomialOrder order)
    : nvars_(nvars),
      generators_(std::move(generators)),
      order_(std::move(order)),
      cache_(std::make_shared<Cache>()) {
  for (const Polynomial& g : generators_)
    if (g.nvars() != nvars_)
      throw Error(ErrorKind::UniverseMismatch, "generator in a ring of " + std::to_string(g.nvars()) +
                                                   " variables, ideal has " + std::to_string(nvars_));
}

Ideal Ideal::fromReducedBasis(std::size_t nvars, std::vector<Polynomial> basis, MonomialOrder order) {
  Ideal ideal(nvars, basis, std::move(order));
  std::call_once(ideal.cache_->once, [&] { ideal.cache_->basis = std::move(basis); });
  return ideal;
}

const std::vector<Polynomial>& Ideal::basis() const {
  std::call_once(cache_->once, [this] { cache_->basis = buchberger(generators_, order_); });
  return cache_->basis;
}

bool Ideal::isUnit() const {
  const auto& b = basis();
  return b.size() == 1 && b.front().isConstant() && !b.front().isZero();
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.nvars() != nvars_) throw Error(ErrorKind::UniverseMismatch, "polynomial outside ring");
  return normalForm(f, basis(), order_).isZero();
}

Ideal Ideal::withOrder(const MonomialOrder& order) const {
  if (order == order_) return *this;
  return Ideal(nvars_, basis(), order);
}

std::vector<std::string> Ideal::basisStrings() const {
  std::vector<std::string> out;
  for (const Polynomial& g : basis()) out.push_back(g.toString(order_));
  return out;
}

}  // namespace slackkit::gb
