#pragma once

#include <cstdint>
#include <vector>

namespace ringlab {

/// Fixed-size membership set over element ids 0..n-1, packed 64 per word.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(uint32_t n) : n_(n), words_((n + 63) / 64, 0) {}

  uint32_t size() const { return n_; }

  bool test(uint32_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(uint32_t i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(uint32_t i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  uint32_t count() const {
    uint32_t c = 0;
    for (uint64_t w : words_) c += uint32_t(__builtin_popcountll(w));
    return c;
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const Bitset& other) const {
    size_t k = std::min(words_.size(), other.words_.size());
    for (size_t i = 0; i < k; ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bitset& other) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t ow = i < other.words_.size() ? other.words_[i] : 0;
      if (words_[i] & ~ow) return false;
    }
    return true;
  }

  std::vector<uint32_t> to_list() const {
    std::vector<uint32_t> out;
    out.reserve(count());
    for (uint32_t i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  // Merge bits from another set of the same size (used by parallel scans
  // that fill per-thread partial sets).
  void operator|=(const Bitset& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  }

 private:
  uint32_t n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace ringlab
