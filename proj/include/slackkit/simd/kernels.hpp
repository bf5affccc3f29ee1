#pragma once

// Exponent-vector kernels behind every monomial operation.
//
// Exponents are stored as uint16_t lanes, zero-padded to a multiple of
// kLaneBlock so the vector variants never need a scalar tail. All kernels
// take the padded lane count `n`.

#include <cstddef>
#include <cstdint>

namespace slackkit::simd {

using Exponent = std::uint16_t;

inline constexpr std::size_t kLaneBlock = 16;

constexpr std::size_t paddedLanes(std::size_t nvars) {
  return (nvars + kLaneBlock - 1) / kLaneBlock * kLaneBlock;
}

struct MonomialKernels {
  const char* name;
  /// out = a + b; returns false if any lane exceeds 0xFFFF.
  bool (*add)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n);
  /// out = max(a, b) lane-wise.
  void (*lcm)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n);
  /// out = a - b; requires b <= a lane-wise.
  void (*sub)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n);
  /// a <= b in every lane.
  bool (*divides)(const Exponent* a, const Exponent* b, std::size_t n);
  /// no lane is nonzero in both.
  bool (*coprime)(const Exponent* a, const Exponent* b, std::size_t n);
  /// index of the first / last lane where a and b differ, or -1.
  std::ptrdiff_t (*firstDiff)(const Exponent* a, const Exponent* b, std::size_t n);
  std::ptrdiff_t (*lastDiff)(const Exponent* a, const Exponent* b, std::size_t n);
  /// lastDiff restricted to lanes where mask is 0xFFFF.
  std::ptrdiff_t (*lastDiffMasked)(const Exponent* a, const Exponent* b, const Exponent* mask,
                                   std::size_t n);
  std::uint32_t (*degree)(const Exponent* a, std::size_t n);
  std::uint32_t (*maskedDegree)(const Exponent* a, const Exponent* mask, std::size_t n);
};

const MonomialKernels& scalarKernels();

/// AVX2 variant, or nullptr when it was not compiled in or the CPU lacks AVX2.
const MonomialKernels* avx2Kernels();

/// Kernel table used by the polynomial ring. Picks the widest supported
/// variant on first use; SLACKKIT_SIMD=scalar forces the reference kernels.
const MonomialKernels& activeKernels();

}  // namespace slackkit::simd
