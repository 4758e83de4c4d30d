#include "epimc/simd/bit_kernels.hpp"

#include <bit>

namespace epimc::simd {
namespace {

void and_words(const Word* a, const Word* b, Word* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] & b[k];
}

void or_words(const Word* a, const Word* b, Word* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] | b[k];
}

void andnot_words(const Word* a, const Word* b, Word* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] & ~b[k];
}

void and_or_words(const Word* r, const Word* s, const Word* g, Word* out,
                  std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = r[k] & (s[k] | g[k]);
}

bool any_andnot(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    if ((a[k] & ~b[k]) != 0) return true;
  }
  return false;
}

bool any_and(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    if ((a[k] & b[k]) != 0) return true;
  }
  return false;
}

std::size_t popcount(const Word* a, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t k = 0; k < n; ++k) total += static_cast<std::size_t>(std::popcount(a[k]));
  return total;
}

bool equal(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] != b[k]) return false;
  }
  return true;
}

}  // namespace

const BitKernels& scalar_kernels() {
  static const BitKernels table{"scalar", and_words,  or_words, andnot_words, and_or_words,
                                any_andnot, any_and,   popcount, equal};
  return table;
}

}  // namespace epimc::simd
