#include <random>
#include <vector>

#include "doctest.h"

#include "epimc/bitset.hpp"
#include "epimc/generators.hpp"
#include "epimc/simd/bit_kernels.hpp"

using namespace epimc;
using simd::Word;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n, bool sparse) {
  std::vector<Word> out(n);
  for (auto& w : out) w = sparse ? (rng() & rng() & rng()) : rng();
  return out;
}

void check_equivalent(const simd::BitKernels& ref, const simd::BitKernels& alt) {
  std::mt19937_64 rng(base_seed(7));
  for (std::size_t n = 0; n <= 37; ++n) {
    for (int round = 0; round < 20; ++round) {
      const bool sparse = round % 2 == 0;
      auto a = random_words(rng, n, sparse);
      auto b = random_words(rng, n, sparse);
      auto c = random_words(rng, n, sparse);
      if (round % 5 == 0) b = a;  // subset and equality edge cases
      std::vector<Word> r1(n), r2(n);

      ref.and_words(a.data(), b.data(), r1.data(), n);
      alt.and_words(a.data(), b.data(), r2.data(), n);
      CHECK(r1 == r2);
      ref.or_words(a.data(), b.data(), r1.data(), n);
      alt.or_words(a.data(), b.data(), r2.data(), n);
      CHECK(r1 == r2);
      ref.andnot_words(a.data(), b.data(), r1.data(), n);
      alt.andnot_words(a.data(), b.data(), r2.data(), n);
      CHECK(r1 == r2);
      ref.and_or_words(a.data(), b.data(), c.data(), r1.data(), n);
      alt.and_or_words(a.data(), b.data(), c.data(), r2.data(), n);
      CHECK(r1 == r2);

      CHECK(ref.any_andnot(a.data(), b.data(), n) == alt.any_andnot(a.data(), b.data(), n));
      CHECK(ref.any_and(a.data(), c.data(), n) == alt.any_and(a.data(), c.data(), n));
      CHECK(ref.popcount(a.data(), n) == alt.popcount(a.data(), n));
      CHECK(ref.equal(a.data(), b.data(), n) == alt.equal(a.data(), b.data(), n));
    }
  }
}

}  // namespace

TEST_CASE("avx2 kernels agree with the scalar reference") {
  const simd::BitKernels* avx2 = simd::avx2_kernels();
  if (avx2 == nullptr || !simd::cpu_supports_avx2()) {
    MESSAGE("AVX2 kernels unavailable on this build or CPU; skipping");
    return;
  }
  check_equivalent(simd::scalar_kernels(), *avx2);
}

TEST_CASE("scalar kernels match word-by-word arithmetic") {
  std::mt19937_64 rng(base_seed(11));
  const auto& k = simd::scalar_kernels();
  for (std::size_t n = 0; n < 9; ++n) {
    auto a = random_words(rng, n, false);
    auto b = random_words(rng, n, true);
    std::size_t pop = 0;
    bool subset = true;
    for (std::size_t i = 0; i < n; ++i) {
      pop += static_cast<std::size_t>(__builtin_popcountll(a[i]));
      subset = subset && (b[i] & ~a[i]) == 0;
    }
    CHECK(k.popcount(a.data(), n) == pop);
    CHECK(k.any_andnot(b.data(), a.data(), n) == !subset);
  }
}

TEST_CASE("active kernels honour the scalar override name") {
  const auto& active = simd::active_kernels();
  CHECK((active.name == simd::scalar_kernels().name ||
         (simd::avx2_kernels() != nullptr && active.name == simd::avx2_kernels()->name)));
}

TEST_CASE("world sets agree with a vector<bool> model") {
  std::mt19937_64 rng(base_seed(13));
  for (std::size_t n : {1, 5, 63, 64, 65, 130, 257}) {
    std::vector<bool> va(n), vb(n);
    WorldSet a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      va[i] = rng() % 2;
      vb[i] = rng() % 3 == 0;
      a.assign(i, va[i]);
      b.assign(i, vb[i]);
    }
    const WorldSet both = a & b;
    const WorldSet either = a | b;
    const WorldSet diff = a - b;
    const WorldSet comp = a.complement();
    std::size_t count = 0;
    bool subset = true;
    bool meets = false;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(both.test(i) == (va[i] && vb[i]));
      CHECK(either.test(i) == (va[i] || vb[i]));
      CHECK(diff.test(i) == (va[i] && !vb[i]));
      CHECK(comp.test(i) == !va[i]);
      count += va[i];
      subset = subset && (!vb[i] || va[i]);
      meets = meets || (va[i] && vb[i]);
    }
    CHECK(a.count() == count);
    CHECK(comp.count() == n - count);
    CHECK(b.is_subset_of(a) == subset);
    CHECK(a.intersects(b) == meets);
    CHECK(WorldSet::full(n).all());
    CHECK(a.ids().size() == count);
  }
}

TEST_CASE("bit matrices: closures, transpose and transitivity") {
  BitMatrix r(70);
  r.set(0, 1);
  r.set(1, 69);
  CHECK_FALSE(r.is_transitive());
  r.set(0, 69);
  CHECK(r.is_transitive());
  CHECK_FALSE(r.is_symmetric());
  const BitMatrix t = r.transpose();
  CHECK(t.test(69, 1));
  CHECK(t.pair_count() == 3);
  r.close_symmetric();
  CHECK(r.is_symmetric());
  r.close_reflexive();
  CHECK(r.is_reflexive());
  CHECK(r.pair_count() == 6 + 70);
  CHECK(BitMatrix::identity(70).is_subset_of(r));
}
