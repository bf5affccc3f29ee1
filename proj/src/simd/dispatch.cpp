#include <cstdlib>
#include <string_view>

#include "slackkit/simd/kernels.hpp"

namespace slackkit::simd {

#if defined(SLACKKIT_HAVE_AVX2_KERNELS)
const MonomialKernels& avx2KernelTable();
#endif

const MonomialKernels* avx2Kernels() {
#if defined(SLACKKIT_HAVE_AVX2_KERNELS)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return supported ? &avx2KernelTable() : nullptr;
#else
  return nullptr;
#endif
}

const MonomialKernels& activeKernels() {
  static const MonomialKernels* chosen = [] {
    const char* env = std::getenv("SLACKKIT_SIMD");
    if (env && std::string_view(env) == "scalar") return &scalarKernels();
    if (const MonomialKernels* k = avx2Kernels()) return k;
    return &scalarKernels();
  }();
  return *chosen;
}

}  // namespace slackkit::simd
