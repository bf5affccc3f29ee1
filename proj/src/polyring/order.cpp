#include "slackkit/polyring/order.hpp"

#include <algorithm>
#include <charconv>

#include "slackkit/error.hpp"

namespace slackkit::poly {

namespace {

std::strong_ordering fromInt(long long v) {
  return v < 0 ? std::strong_ordering::less
               : (v > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// Reverse-lexicographic tie break: the monomial with the smaller exponent in
// the last differing variable is the larger one.
std::strong_ordering revlexTail(const Monomial& a, const Monomial& b, std::ptrdiff_t i) {
  if (i < 0) return std::strong_ordering::equal;
  return fromInt(static_cast<long long>(b.exponent(i)) - a.exponent(i));
}

}  // namespace

MonomialOrder MonomialOrder::lex() {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  return o;
}

MonomialOrder MonomialOrder::grevlex() { return MonomialOrder{}; }

MonomialOrder MonomialOrder::block(std::size_t nvars, std::span<const std::size_t> front) {
  MonomialOrder o;
  o.kind_ = Kind::BlockElimination;
  o.nvars_ = nvars;
  o.front_.assign(front.begin(), front.end());
  std::sort(o.front_.begin(), o.front_.end());
  o.front_.erase(std::unique(o.front_.begin(), o.front_.end()), o.front_.end());
  const std::size_t lanes = simd::paddedLanes(nvars);
  o.frontMask_.assign(lanes, 0);
  o.restMask_.assign(lanes, 0);
  for (std::size_t i = 0; i < nvars; ++i) o.restMask_[i] = 0xFFFF;
  for (std::size_t v : o.front_) {
    if (v >= nvars) throw Error(ErrorKind::UniverseMismatch, "block variable outside ring");
    o.frontMask_[v] = 0xFFFF;
    o.restMask_[v] = 0;
  }
  return o;
}

bool MonomialOrder::inFrontBlock(std::size_t var) const {
  return kind_ == Kind::BlockElimination && std::binary_search(front_.begin(), front_.end(), var);
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const auto& k = simd::activeKernels();
  const std::size_t n = a.laneCount();
  switch (kind_) {
    case Kind::Lex: {
      const std::ptrdiff_t i = k.firstDiff(a.lanes(), b.lanes(), n);
      if (i < 0) return std::strong_ordering::equal;
      return fromInt(static_cast<long long>(a.exponent(i)) - b.exponent(i));
    }
    case Kind::GRevLex: {
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlexTail(a, b, k.lastDiff(a.lanes(), b.lanes(), n));
    }
    case Kind::BlockElimination: {
      if (n != frontMask_.size())
        throw Error(ErrorKind::UniverseMismatch, "block order built for a different ring");
      const std::uint32_t fa = k.maskedDegree(a.lanes(), frontMask_.data(), n);
      const std::uint32_t fb = k.maskedDegree(b.lanes(), frontMask_.data(), n);
      if (fa != fb) return fa <=> fb;
      if (auto c = revlexTail(a, b, k.lastDiffMasked(a.lanes(), b.lanes(), frontMask_.data(), n));
          c != 0)
        return c;
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlexTail(a, b, k.lastDiffMasked(a.lanes(), b.lanes(), restMask_.data(), n));
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::descriptor() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::GRevLex: return "grevlex";
    case Kind::BlockElimination: {
      std::string s = "block:";
      for (std::size_t i = 0; i < front_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(front_[i]);
      }
      return s + ";" + std::to_string(nvars_);
    }
  }
  return "grevlex";
}

MonomialOrder MonomialOrder::parse(std::string_view d) {
  if (d == "lex") return lex();
  if (d == "grevlex") return grevlex();
  if (d.starts_with("block:")) {
    d.remove_prefix(6);
    const auto semi = d.find(';');
    if (semi == std::string_view::npos) throw Error(ErrorKind::BadInput, "block order needs ';nvars'");
    auto toIndex = [](std::string_view s) {
      std::size_t v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || p != s.data() + s.size())
        throw Error(ErrorKind::BadInput, "bad index '" + std::string(s) + "'");
      return v;
    };
    std::vector<std::size_t> front;
    std::string_view list = d.substr(0, semi);
    while (!list.empty()) {
      const auto comma = list.find(',');
      front.push_back(toIndex(list.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      list.remove_prefix(comma + 1);
    }
    return block(toIndex(d.substr(semi + 1)), front);
  }
  throw Error(ErrorKind::BadInput, "unknown monomial order '" + std::string(d) + "'");
}

}  // namespace slackkit::poly
