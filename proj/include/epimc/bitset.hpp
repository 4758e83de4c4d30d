#pragma once

// Dense world sets and world-by-world relations over the active bit kernels.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "epimc/simd/bit_kernels.hpp"

namespace epimc {

using WorldId = std::size_t;

// A subset of {0, ..., size-1}. Bits beyond `size` are always zero.
class WorldSet {
 public:
  using Word = simd::Word;

  WorldSet() = default;
  explicit WorldSet(std::size_t size) : size_(size), words_(simd::words_for(size), 0) {}

  static WorldSet full(std::size_t size);
  static WorldSet singleton(std::size_t size, WorldId w);
  static WorldSet from_ids(std::size_t size, std::span<const WorldId> ids);

  std::size_t size() const noexcept { return size_; }
  bool test(WorldId w) const noexcept {
    return (words_[w / simd::kWordBits] >> (w % simd::kWordBits)) & 1U;
  }
  void set(WorldId w) noexcept { words_[w / simd::kWordBits] |= Word{1} << (w % simd::kWordBits); }
  void reset(WorldId w) noexcept {
    words_[w / simd::kWordBits] &= ~(Word{1} << (w % simd::kWordBits));
  }
  void assign(WorldId w, bool value) noexcept { value ? set(w) : reset(w); }

  std::size_t count() const;
  bool none() const;
  bool all() const { return count() == size_; }

  bool is_subset_of(const WorldSet& other) const;
  bool intersects(const WorldSet& other) const;

  WorldSet complement() const;
  WorldSet& operator&=(const WorldSet& other);
  WorldSet& operator|=(const WorldSet& other);
  WorldSet& operator-=(const WorldSet& other);

  friend WorldSet operator&(WorldSet a, const WorldSet& b) { return a &= b; }
  friend WorldSet operator|(WorldSet a, const WorldSet& b) { return a |= b; }
  friend WorldSet operator-(WorldSet a, const WorldSet& b) { return a -= b; }
  friend bool operator==(const WorldSet& a, const WorldSet& b);
  friend bool operator<(const WorldSet& a, const WorldSet& b);

  std::vector<WorldId> ids() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word word = words_[k];
      while (word != 0) {
        const int bit = __builtin_ctzll(word);
        f(static_cast<WorldId>(k * simd::kWordBits + static_cast<std::size_t>(bit)));
        word &= word - 1;
      }
    }
  }

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

 private:
  void clear_tail() noexcept;

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

// Square boolean matrix; row v holds the successors of world v.
class BitMatrix {
 public:
  using Word = simd::Word;

  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), stride_(simd::words_for(n)), words_(n * stride_, 0) {}

  static BitMatrix full(std::size_t n);
  static BitMatrix identity(std::size_t n);

  std::size_t dimension() const noexcept { return n_; }
  std::size_t stride() const noexcept { return stride_; }

  bool test(WorldId v, WorldId u) const noexcept {
    return (words_[v * stride_ + u / simd::kWordBits] >> (u % simd::kWordBits)) & 1U;
  }
  void set(WorldId v, WorldId u) noexcept {
    words_[v * stride_ + u / simd::kWordBits] |= Word{1} << (u % simd::kWordBits);
  }
  void reset(WorldId v, WorldId u) noexcept {
    words_[v * stride_ + u / simd::kWordBits] &= ~(Word{1} << (u % simd::kWordBits));
  }

  std::span<const Word> row(WorldId v) const noexcept { return {words_.data() + v * stride_, stride_}; }
  std::span<Word> row(WorldId v) noexcept { return {words_.data() + v * stride_, stride_}; }
  WorldSet row_set(WorldId v) const;

  std::size_t pair_count() const;
  bool is_subset_of(const BitMatrix& other) const;
  std::vector<std::pair<WorldId, WorldId>> pairs() const;

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;

  BitMatrix transpose() const;
  void close_reflexive();
  void close_symmetric();

  BitMatrix& operator&=(const BitMatrix& other);
  BitMatrix& operator|=(const BitMatrix& other);
  friend BitMatrix operator&(BitMatrix a, const BitMatrix& b) { return a &= b; }
  friend BitMatrix operator|(BitMatrix a, const BitMatrix& b) { return a |= b; }
  friend bool operator==(const BitMatrix& a, const BitMatrix& b);

 private:
  void clear_row_tails() noexcept;

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> words_;
};

using Relation = BitMatrix;

}  // namespace epimc
