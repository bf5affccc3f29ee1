#include "slackkit/simd/kernels.hpp"

namespace slackkit::simd {
namespace {

bool addScalar(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t s = std::uint32_t{a[i]} + b[i];
    ok &= s <= 0xFFFFu;
    out[i] = static_cast<Exponent>(s);
  }
  return ok;
}

void lcmScalar(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
}

void subScalar(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Exponent>(a[i] - b[i]);
}

bool dividesScalar(const Exponent* a, const Exponent* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool coprimeScalar(const Exponent* a, const Exponent* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

std::ptrdiff_t firstDiffScalar(const Exponent* a, const Exponent* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

std::ptrdiff_t lastDiffScalar(const Exponent* a, const Exponent* b, std::size_t n) {
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

std::ptrdiff_t lastDiffMaskedScalar(const Exponent* a, const Exponent* b, const Exponent* mask,
                                    std::size_t n) {
  for (std::size_t i = n; i-- > 0;)
    if ((a[i] & mask[i]) != (b[i] & mask[i])) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

std::uint32_t degreeScalar(const Exponent* a, std::size_t n) {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < n; ++i) s += a[i];
  return s;
}

std::uint32_t maskedDegreeScalar(const Exponent* a, const Exponent* mask, std::size_t n) {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] & mask[i];
  return s;
}

constexpr MonomialKernels kScalar{
    "scalar",        addScalar,     lcmScalar,      subScalar,
    dividesScalar,   coprimeScalar, firstDiffScalar, lastDiffScalar,
    lastDiffMaskedScalar, degreeScalar, maskedDegreeScalar,
};

}  // namespace

const MonomialKernels& scalarKernels() { return kScalar; }

}  // namespace slackkit::simd
