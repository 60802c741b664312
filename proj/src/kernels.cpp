#include <cstdlib>
#include <string_view>

#include "geneo/kernels.hpp"

namespace geneo::kernels {

#if defined(GENEO_BUILD_AVX2)
const KernelSet& avx2_set();
#endif

const KernelSet* avx2() {
#if defined(GENEO_BUILD_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_set() : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& active() {
  static const KernelSet* chosen = [] {
    const char* env = std::getenv("GENEO_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") return &scalar();
    if (const KernelSet* k = avx2()) return k;
    return &scalar();
  }();
  return *chosen;
}

}  // namespace geneo::kernels
