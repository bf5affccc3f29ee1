#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string_view>
#include <vector>

#include "slackkit/simd/kernels.hpp"

using namespace slackkit::simd;

namespace {

struct Lanes {
  std::vector<Exponent> a, b, mask;
};

// Sparse small exponents with occasional large ones and long equal runs, so
// the first/last difference kernels see ties at every position.
Lanes randomLanes(std::mt19937& rng, std::size_t n) {
  Lanes l{std::vector<Exponent>(n), std::vector<Exponent>(n), std::vector<Exponent>(n)};
  const std::size_t live = rng() % (n + 1);
  for (std::size_t i = 0; i < live; ++i) {
    const Exponent v = rng() % 4 == 0 ? static_cast<Exponent>(rng() % 0x8000) : static_cast<Exponent>(rng() % 3);
    l.a[i] = v;
    l.b[i] = rng() % 3 == 0 ? static_cast<Exponent>(rng() % 3) : v;
    l.mask[i] = rng() % 2 ? 0xFFFF : 0;
  }
  return l;
}

void checkAgree(const MonomialKernels& ref, const MonomialKernels& k, const Lanes& l) {
  const std::size_t n = l.a.size();
  std::vector<Exponent> o1(n), o2(n);
  CHECK(ref.add(l.a.data(), l.b.data(), o1.data(), n) == k.add(l.a.data(), l.b.data(), o2.data(), n));
  CHECK(o1 == o2);
  ref.lcm(l.a.data(), l.b.data(), o1.data(), n);
  k.lcm(l.a.data(), l.b.data(), o2.data(), n);
  CHECK(o1 == o2);
  // lcm(a, b) - b is always defined
  std::vector<Exponent> l1 = o1;
  ref.sub(l1.data(), l.b.data(), o1.data(), n);
  k.sub(l1.data(), l.b.data(), o2.data(), n);
  CHECK(o1 == o2);
  CHECK(ref.divides(l.a.data(), l.b.data(), n) == k.divides(l.a.data(), l.b.data(), n));
  CHECK(ref.divides(l.b.data(), l1.data(), n) == k.divides(l.b.data(), l1.data(), n));
  CHECK(ref.coprime(l.a.data(), l.b.data(), n) == k.coprime(l.a.data(), l.b.data(), n));
  CHECK(ref.firstDiff(l.a.data(), l.b.data(), n) == k.firstDiff(l.a.data(), l.b.data(), n));
  CHECK(ref.lastDiff(l.a.data(), l.b.data(), n) == k.lastDiff(l.a.data(), l.b.data(), n));
  CHECK(ref.lastDiffMasked(l.a.data(), l.b.data(), l.mask.data(), n) ==
        k.lastDiffMasked(l.a.data(), l.b.data(), l.mask.data(), n));
  CHECK(ref.degree(l.a.data(), n) == k.degree(l.a.data(), n));
  CHECK(ref.maskedDegree(l.a.data(), l.mask.data(), n) == k.maskedDegree(l.a.data(), l.mask.data(), n));
}

}  // namespace

TEST_SUITE("simd") {

TEST_CASE("scalar kernels on a hand example") {
  const MonomialKernels& s = scalarKernels();
  std::vector<Exponent> a(16, 0), b(16, 0), out(16);
  a[0] = 2;
  a[5] = 1;
  b[5] = 3;
  b[15] = 1;
  CHECK(s.add(a.data(), b.data(), out.data(), 16));
  CHECK(out[5] == 4);
  s.lcm(a.data(), b.data(), out.data(), 16);
  CHECK(out[0] == 2);
  CHECK(out[5] == 3);
  CHECK(out[15] == 1);
  CHECK_FALSE(s.divides(a.data(), b.data(), 16));
  CHECK_FALSE(s.coprime(a.data(), b.data(), 16));
  CHECK(s.firstDiff(a.data(), b.data(), 16) == 0);
  CHECK(s.lastDiff(a.data(), b.data(), 16) == 15);
  CHECK(s.firstDiff(a.data(), a.data(), 16) == -1);
  CHECK(s.degree(b.data(), 16) == 4);
  std::vector<Exponent> big(16, 0);
  big[3] = 0xFFFF;
  CHECK_FALSE(s.add(big.data(), big.data(), out.data(), 16));
}

TEST_CASE("vector kernels match the scalar reference") {
  const MonomialKernels* v = avx2Kernels();
  if (!v) {
    MESSAGE("AVX2 kernels unavailable; nothing to compare");
    return;
  }
  std::mt19937 rng(41);
  for (std::size_t blocks = 1; blocks <= 4; ++blocks)
    for (int trial = 0; trial < 400; ++trial) checkAgree(scalarKernels(), *v, randomLanes(rng, blocks * kLaneBlock));
}

TEST_CASE("overflow detection matches") {
  const MonomialKernels* v = avx2Kernels();
  if (!v) return;
  for (std::size_t lane = 0; lane < 32; ++lane) {
    std::vector<Exponent> a(32, 1), b(32, 1), o(32);
    a[lane] = 0xFFFF;
    CHECK_FALSE(v->add(a.data(), b.data(), o.data(), 32));
    CHECK_FALSE(scalarKernels().add(a.data(), b.data(), o.data(), 32));
  }
}

TEST_CASE("dispatch honours the environment") {
  const char* env = std::getenv("SLACKKIT_SIMD");
  const std::string_view chosen = activeKernels().name;
  if (env && std::string_view(env) == "scalar")
    CHECK(chosen == "scalar");
  else if (avx2Kernels())
    CHECK(chosen == "avx2");
  else
    CHECK(chosen == "scalar");
}

TEST_CASE("padding") {
  CHECK(paddedLanes(1) == 16);
  CHECK(paddedLanes(16) == 16);
  CHECK(paddedLanes(17) == 32);
  CHECK(paddedLanes(37) == 48);
}

}
