#include <cstdlib>
#include <string_view>

#include "epimc/simd/bit_kernels.hpp"

namespace epimc::simd {

bool cpu_supports_avx2() {
#if EPIMC_SIMD_X86 && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

const BitKernels& select_kernels() {
  if (const char* forced = std::getenv("EPIMC_SIMD")) {
    if (std::string_view(forced) == "scalar") return scalar_kernels();
  }
  if (const BitKernels* avx2 = avx2_kernels(); avx2 != nullptr && cpu_supports_avx2()) {
    return *avx2;
  }
  return scalar_kernels();
}

}  // namespace

const BitKernels& active_kernels() {
  static const BitKernels& table = select_kernels();
  return table;
}

}  // namespace epimc::simd
