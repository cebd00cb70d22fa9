#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "mcover/error.hpp"

namespace mcover {

// Word-packed bit vector over a fixed index space. The Tag keeps edge-indexed
// and vertex-indexed sets from being mixed up.
template <class Tag>
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}
  BitSet(std::size_t size, std::initializer_list<int> members) : BitSet(size) {
    for (int i : members) set(static_cast<std::size_t>(i));
  }

  static BitSet full(std::size_t size) {
    BitSet b(size);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // Index of the lowest set bit, or size() when empty.
  std::size_t first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return size_;
  }

  BitSet& operator^=(const BitSet& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  BitSet& operator&=(const BitSet& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  BitSet& operator|=(const BitSet& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  BitSet& subtract(const BitSet& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  friend BitSet operator^(BitSet a, const BitSet& b) { return a ^= b; }
  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }

  BitSet complement() const {
    BitSet c = *this;
    for (auto& w : c.words_) w = ~w;
    c.trim();
    return c;
  }

  // |this ∩ o| mod 2, i.e. the GF(2) inner product.
  bool dot(const BitSet& o) const {
    check_same(o);
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & o.words_[k];
    return std::popcount(acc) & 1;
  }

  std::size_t intersection_count(const BitSet& o) const {
    check_same(o);
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
    return c;
  }

  bool is_subset_of(const BitSet& o) const {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(static_cast<int>(k * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const BitSet& a, const BitSet& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

  // Lexicographic on member lists (lowest index most significant).
  friend bool operator<(const BitSet& a, const BitSet& b) { return a.members() < b.members(); }

 private:
  void check_same(const BitSet& o) const {
    if (o.size_ != size_)
      throw Error(ErrorCode::kDimensionMismatch, "bit sets over different index spaces (" +
                                                     std::to_string(size_) + " vs " +
                                                     std::to_string(o.size_) + ")");
  }
  void trim() {
    if (size_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct EdgeTag;
struct VertexTag;
using EdgeSet = BitSet<EdgeTag>;
using VertexSet = BitSet<VertexTag>;

template <class Tag>
struct BitSetHash {
  std::size_t operator()(const BitSet<Tag>& b) const {
    std::size_t h = std::hash<std::size_t>{}(b.size());
    for (auto w : b.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace mcover
