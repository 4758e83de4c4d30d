#include "epimc/bitset.hpp"

#include <algorithm>
#include <cassert>

namespace epimc {

namespace {

const simd::BitKernels& kernels() { return simd::active_kernels(); }

simd::Word tail_mask(std::size_t size) {
  const std::size_t used = size % simd::kWordBits;
  return used == 0 ? ~simd::Word{0} : (simd::Word{1} << used) - 1;
}

}  // namespace

WorldSet WorldSet::full(std::size_t size) {
  WorldSet s(size);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  s.clear_tail();
  return s;
}

WorldSet WorldSet::singleton(std::size_t size, WorldId w) {
  WorldSet s(size);
  s.set(w);
  return s;
}

WorldSet WorldSet::from_ids(std::size_t size, std::span<const WorldId> ids) {
  WorldSet s(size);
  for (WorldId w : ids) s.set(w);
  return s;
}

void WorldSet::clear_tail() noexcept {
  if (!words_.empty()) words_.back() &= tail_mask(size_);
}

std::size_t WorldSet::count() const { return kernels().popcount(words_.data(), words_.size()); }

bool WorldSet::none() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool WorldSet::is_subset_of(const WorldSet& other) const {
  assert(size_ == other.size_);
  return !kernels().any_andnot(words_.data(), other.words_.data(), words_.size());
}

bool WorldSet::intersects(const WorldSet& other) const {
  assert(size_ == other.size_);
  return kernels().any_and(words_.data(), other.words_.data(), words_.size());
}

WorldSet WorldSet::complement() const {
  WorldSet out(size_);
  for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] = ~words_[k];
  out.clear_tail();
  return out;
}

WorldSet& WorldSet::operator&=(const WorldSet& other) {
  assert(size_ == other.size_);
  kernels().and_words(words_.data(), other.words_.data(), words_.data(), words_.size());
  return *this;
}

WorldSet& WorldSet::operator|=(const WorldSet& other) {
  assert(size_ == other.size_);
  kernels().or_words(words_.data(), other.words_.data(), words_.data(), words_.size());
  return *this;
}

WorldSet& WorldSet::operator-=(const WorldSet& other) {
  assert(size_ == other.size_);
  kernels().andnot_words(words_.data(), other.words_.data(), words_.data(), words_.size());
  return *this;
}

bool operator==(const WorldSet& a, const WorldSet& b) {
  return a.size_ == b.size_ && kernels().equal(a.words_.data(), b.words_.data(), a.words_.size());
}

bool operator<(const WorldSet& a, const WorldSet& b) {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  return a.words_ < b.words_;
}

std::vector<WorldId> WorldSet::ids() const {
  std::vector<WorldId> out;
  out.reserve(count());
  for_each([&](WorldId w) { out.push_back(w); });
  return out;
}

BitMatrix BitMatrix::full(std::size_t n) {
  BitMatrix m(n);
  std::fill(m.words_.begin(), m.words_.end(), ~Word{0});
  m.clear_row_tails();
  return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (WorldId v = 0; v < n; ++v) m.set(v, v);
  return m;
}

void BitMatrix::clear_row_tails() noexcept {
  if (stride_ == 0) return;
  const Word mask = tail_mask(n_);
  for (std::size_t v = 0; v < n_; ++v) words_[v * stride_ + stride_ - 1] &= mask;
}

WorldSet BitMatrix::row_set(WorldId v) const {
  WorldSet s(n_);
  std::copy_n(words_.begin() + static_cast<std::ptrdiff_t>(v * stride_), stride_, s.words().begin());
  return s;
}

std::size_t BitMatrix::pair_count() const { return kernels().popcount(words_.data(), words_.size()); }

bool BitMatrix::is_subset_of(const BitMatrix& other) const {
  assert(n_ == other.n_);
  return !kernels().any_andnot(words_.data(), other.words_.data(), words_.size());
}

std::vector<std::pair<WorldId, WorldId>> BitMatrix::pairs() const {
  std::vector<std::pair<WorldId, WorldId>> out;
  for (WorldId v = 0; v < n_; ++v) {
    row_set(v).for_each([&](WorldId u) { out.emplace_back(v, u); });
  }
  return out;
}

bool BitMatrix::is_reflexive() const {
  for (WorldId v = 0; v < n_; ++v) {
    if (!test(v, v)) return false;
  }
  return true;
}

bool BitMatrix::is_symmetric() const { return *this == transpose(); }

bool BitMatrix::is_transitive() const {
  // R;R ⊆ R: every successor's row must be contained in the source row.
  for (WorldId v = 0; v < n_; ++v) {
    const auto from = row(v);
    for (WorldId u : row_set(v).ids()) {
      if (kernels().any_andnot(row(u).data(), from.data(), stride_)) return false;
    }
  }
  return true;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(n_);
  for (WorldId v = 0; v < n_; ++v) {
    row_set(v).for_each([&](WorldId u) { t.set(u, v); });
  }
  return t;
}

void BitMatrix::close_reflexive() {
  for (WorldId v = 0; v < n_; ++v) set(v, v);
}

void BitMatrix::close_symmetric() { *this |= transpose(); }

BitMatrix& BitMatrix::operator&=(const BitMatrix& other) {
  assert(n_ == other.n_);
  kernels().and_words(words_.data(), other.words_.data(), words_.data(), words_.size());
  return *this;
}

BitMatrix& BitMatrix::operator|=(const BitMatrix& other) {
  assert(n_ == other.n_);
  kernels().or_words(words_.data(), other.words_.data(), words_.data(), words_.size());
  return *this;
}

bool operator==(const BitMatrix& a, const BitMatrix& b) {
  return a.n_ == b.n_ && kernels().equal(a.words_.data(), b.words_.data(), a.words_.size());
}

}  // namespace epimc
