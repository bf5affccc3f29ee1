// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "slackkit/simd/kernels.hpp"

namespace slackkit::simd {
namespace {

inline __m256i load(const Exponent* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}
inline void store(Exponent* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}
// One bit pair per u16 lane; all-ones when every lane compared equal.
inline std::uint32_t eqMask(__m256i a, __m256i b) {
  return static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(a, b)));
}

bool addAvx2(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  __m256i overflow = _mm256_setzero_si256();
  for (std::size_t i = 0; i < n; i += kLaneBlock) {
    const __m256i va = load(a + i), vb = load(b + i);
    const __m256i wrapped = _mm256_add_epi16(va, vb);
    const __m256i saturated = _mm256_adds_epu16(va, vb);
    overflow = _mm256_or_si256(overflow, _mm256_xor_si256(wrapped, saturated));
    store(out + i, wrapped);
  }
  return _mm256_testz_si256(overflow, overflow) != 0;
}

void lcmAvx2(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  for (std::size_t i = 0; i < n; i += kLaneBlock) store(out + i, _mm256_max_epu16(load(a + i), load(b + i)));
}

void subAvx2(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  for (std::size_t i = 0; i < n; i += kLaneBlock) store(out + i, _mm256_sub_epi16(load(a + i), load(b + i)));
}

bool dividesAvx2(const Exponent* a, const Exponent* b, std::size_t n) {
  for (std::size_t i = 0; i < n; i += kLaneBlock) {
    const __m256i vb = load(b + i);
    if (eqMask(_mm256_max_epu16(load(a + i), vb), vb) != 0xFFFFFFFFu) return false;
  }
  return true;
}

bool coprimeAvx2(const Exponent* a, const Exponent* b, std::size_t n) {
  for (std::size_t i = 0; i < n; i += kLaneBlock) {
    const __m256i m = _mm256_min_epu16(load(a + i), load(b + i));
    if (!_mm256_testz_si256(m, m)) return false;
  }
  return true;
}

std::ptrdiff_t firstDiffAvx2(const Exponent* a, const Exponent* b, std::size_t n) {
  for (std::size_t i = 0; i < n; i += kLaneBlock) {
    const std::uint32_t diff = ~eqMask(load(a + i), load(b + i));
    if (diff) return static_cast<std::ptrdiff_t>(i + __builtin_ctz(diff) / 2);
  }
  return -1;
}

std::ptrdiff_t lastDiffAvx2(const Exponent* a, const Exponent* b, std::size_t n) {
  for (std::size_t i = n; i >= kLaneBlock;) {
    i -= kLaneBlock;
    const std::uint32_t diff = ~eqMask(load(a + i), load(b + i));
    if (diff) return static_cast<std::ptrdiff_t>(i + (31 - __builtin_clz(diff)) / 2);
  }
  return -1;
}

std::ptrdiff_t lastDiffMaskedAvx2(const Exponent* a, const Exponent* b, const Exponent* mask,
                                  std::size_t n) {
  for (std::size_t i = n; i >= kLaneBlock;) {
    i -= kLaneBlock;
    const __m256i m = load(mask + i);
    const std::uint32_t diff =
        ~eqMask(_mm256_and_si256(load(a + i), m), _mm256_and_si256(load(b + i), m));
    if (diff) return static_cast<std::ptrdiff_t>(i + (31 - __builtin_clz(diff)) / 2);
  }
  return -1;
}

inline std::uint32_t horizontalSum(__m256i v) {
  // widen u16 -> u32 before summing so large exponents cannot wrap
  const __m256i lo = _mm256_cvtepu16_epi32(_mm256_castsi256_si128(v));
  const __m256i hi = _mm256_cvtepu16_epi32(_mm256_extracti128_si256(v, 1));
  const __m256i s = _mm256_add_epi32(lo, hi);
  __m128i t = _mm_add_epi32(_mm256_castsi256_si128(s), _mm256_extracti128_si256(s, 1));
  t = _mm_add_epi32(t, _mm_shuffle_epi32(t, _MM_SHUFFLE(1, 0, 3, 2)));
  t = _mm_add_epi32(t, _mm_shuffle_epi32(t, _MM_SHUFFLE(2, 3, 0, 1)));
  return static_cast<std::uint32_t>(_mm_cvtsi128_si32(t));
}

std::uint32_t degreeAvx2(const Exponent* a, std::size_t n) {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < n; i += kLaneBlock) s += horizontalSum(load(a + i));
  return s;
}

std::uint32_t maskedDegreeAvx2(const Exponent* a, const Exponent* mask, std::size_t n) {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < n; i += kLaneBlock)
    s += horizontalSum(_mm256_and_si256(load(a + i), load(mask + i)));
  return s;
}

constexpr MonomialKernels kAvx2{
    "avx2",        addAvx2,     lcmAvx2,      subAvx2,
    dividesAvx2,   coprimeAvx2, firstDiffAvx2, lastDiffAvx2,
    lastDiffMaskedAvx2, degreeAvx2, maskedDegreeAvx2,
};

}  // namespace

const MonomialKernels& avx2KernelTable() { return kAvx2; }

}  // namespace slackkit::simd
