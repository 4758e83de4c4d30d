#pragma once

// Word-level kernels behind WorldSet and BitMatrix.
//
// Every kernel has a portable scalar reference. On x86-64 an AVX2 variant is
// compiled into a separate translation unit and selected at runtime when the
// CPU reports AVX2 support. Setting EPIMC_SIMD=scalar in the environment
// forces the scalar table. All tables must produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <string_view>

#if defined(__x86_64__) || defined(_M_X64)
#define EPIMC_SIMD_X86 1
#else
#define EPIMC_SIMD_X86 0
#endif

namespace epimc::simd {

using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

struct BitKernels {
  std::string_view name;

  // out[k] = a[k] & b[k]
  void (*and_words)(const Word* a, const Word* b, Word* out, std::size_t n);
  // out[k] = a[k] | b[k]
  void (*or_words)(const Word* a, const Word* b, Word* out, std::size_t n);
  // out[k] = a[k] & ~b[k]
  void (*andnot_words)(const Word* a, const Word* b, Word* out, std::size_t n);
  // out[k] = r[k] & (s[k] | g[k]); the partial-communication row filter.
  void (*and_or_words)(const Word* r, const Word* s, const Word* g, Word* out,
                       std::size_t n);
  // (a & ~b) != 0, i.e. a is not a subset of b.
  bool (*any_andnot)(const Word* a, const Word* b, std::size_t n);
  // (a & b) != 0
  bool (*any_and)(const Word* a, const Word* b, std::size_t n);
  std::size_t (*popcount)(const Word* a, std::size_t n);
  bool (*equal)(const Word* a, const Word* b, std::size_t n);
};

const BitKernels& scalar_kernels();

// nullptr when the AVX2 table was not compiled in.
const BitKernels* avx2_kernels();

bool cpu_supports_avx2();

// The table used by the library, fixed on first call.
const BitKernels& active_kernels();

}  // namespace epimc::simd
