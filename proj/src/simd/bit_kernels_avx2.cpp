// Compiled with -mavx2; only reached after a runtime CPU check.

#include "epimc/simd/bit_kernels.hpp"

#if EPIMC_SIMD_X86 && defined(EPIMC_HAVE_AVX2)

#include <immintrin.h>

namespace epimc::simd {
namespace {

constexpr std::size_t kLanes = 4;  // 64-bit words per __m256i

inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void and_words(const Word* a, const Word* b, Word* out, std::size_t n) {
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) store(out + k, _mm256_and_si256(load(a + k), load(b + k)));
  for (; k < n; ++k) out[k] = a[k] & b[k];
}

void or_words(const Word* a, const Word* b, Word* out, std::size_t n) {
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) store(out + k, _mm256_or_si256(load(a + k), load(b + k)));
  for (; k < n; ++k) out[k] = a[k] | b[k];
}

void andnot_words(const Word* a, const Word* b, Word* out, std::size_t n) {
  std::size_t k = 0;
  // _mm256_andnot_si256(x, y) computes ~x & y.
  for (; k + kLanes <= n; k += kLanes) store(out + k, _mm256_andnot_si256(load(b + k), load(a + k)));
  for (; k < n; ++k) out[k] = a[k] & ~b[k];
}

void and_or_words(const Word* r, const Word* s, const Word* g, Word* out, std::size_t n) {
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    store(out + k, _mm256_and_si256(load(r + k), _mm256_or_si256(load(s + k), load(g + k))));
  }
  for (; k < n; ++k) out[k] = r[k] & (s[k] | g[k]);
}

bool any_andnot(const Word* a, const Word* b, std::size_t n) {
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    // testc(b, a) == 1 iff (~b & a) == 0
    if (!_mm256_testc_si256(load(b + k), load(a + k))) return true;
  }
  for (; k < n; ++k) {
    if ((a[k] & ~b[k]) != 0) return true;
  }
  return false;
}

bool any_and(const Word* a, const Word* b, std::size_t n) {
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    if (!_mm256_testz_si256(load(a + k), load(b + k))) return true;
  }
  for (; k < n; ++k) {
    if ((a[k] & b[k]) != 0) return true;
  }
  return false;
}

// Nibble-lookup population count (Mula et al.), accumulated with vpsadbw.
std::size_t popcount(const Word* a, std::size_t n) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    const __m256i v = load(a + k);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i bytes =
        _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(bytes, _mm256_setzero_si256()));
  }
  alignas(32) Word lanes[kLanes];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
  for (; k < n; ++k) total += static_cast<std::size_t>(__builtin_popcountll(a[k]));
  return total;
}

bool equal(const Word* a, const Word* b, std::size_t n) {
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    const __m256i diff = _mm256_xor_si256(load(a + k), load(b + k));
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; k < n; ++k) {
    if (a[k] != b[k]) return false;
  }
  return true;
}

}  // namespace

const BitKernels* avx2_kernels() {
  static const BitKernels table{"avx2",     and_words, or_words, andnot_words, and_or_words,
                                any_andnot, any_and,   popcount, equal};
  return &table;
}

}  // namespace epimc::simd

#else

namespace epimc::simd {
const BitKernels* avx2_kernels() { return nullptr; }
}  // namespace epimc::simd

#endif
