#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace fintop {

/// Largest number of points any space (base or derived) may carry.
inline constexpr std::size_t kMaxPoints = 256;

/// Fixed-width subset of {0, ..., kMaxPoints-1}. Used for open sets, point
/// sets and generators alike.
class PointSet {
 public:
  static constexpr std::size_t kWords = kMaxPoints / 64;

  constexpr PointSet() = default;

  static PointSet singleton(std::size_t i) {
    PointSet s;
    s.insert(i);
    return s;
  }

  /// {0, ..., n-1}
  static PointSet first(std::size_t n) {
    PointSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      const std::size_t take = n >= 64 ? 64 : n;
      s.words_[w] = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
      n -= take;
    }
    return s;
  }

  static PointSet from_indices(const std::vector<std::size_t>& idx) {
    PointSet s;
    for (auto i : idx) s.insert(i);
    return s;
  }

  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool subset_of(const PointSet& o) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  bool intersects(const PointSet& o) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  PointSet& operator|=(const PointSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  PointSet& operator&=(const PointSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  PointSet& operator-=(const PointSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

  /// Compares as an unsigned big integer (the "mask value").
  friend std::strong_ordering mask_compare(const PointSet& a, const PointSet& b) {
    for (std::size_t w = kWords; w-- > 0;) {
      if (a.words_[w] != b.words_[w])
        return a.words_[w] < b.words_[w] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  /// Smallest element; only valid when non-empty.
  std::size_t lowest() const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return kMaxPoints;
  }

  std::uint64_t word(std::size_t w) const { return words_[w]; }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::size_t*;
    using reference = std::size_t;

    iterator() = default;
    iterator(const PointSet* s, std::size_t pos) : set_(s), pos_(pos) { advance_to_member(); }

    std::size_t operator*() const { return pos_; }
    iterator& operator++() {
      ++pos_;
      advance_to_member();
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.pos_ == b.pos_; }

   private:
    void advance_to_member() {
      while (pos_ < kMaxPoints) {
        const std::uint64_t rest = set_->words_[pos_ >> 6] >> (pos_ & 63);
        if (rest) {
          pos_ += static_cast<std::size_t>(std::countr_zero(rest));
          return;
        }
        pos_ = ((pos_ >> 6) + 1) << 6;
      }
      pos_ = kMaxPoints;
    }
    const PointSet* set_ = nullptr;
    std::size_t pos_ = kMaxPoints;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, kMaxPoints); }

  std::vector<std::size_t> elements() const { return {begin(), end()}; }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

/// Canonical order: by cardinality, then by mask value.
inline bool canonical_less(const PointSet& a, const PointSet& b) {
  const auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return mask_compare(a, b) == std::strong_ordering::less;
}

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const { return s.hash(); }
};

}  // namespace fintop
