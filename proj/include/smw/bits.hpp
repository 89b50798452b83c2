#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <stdexcept>

namespace smw {

/// Fixed-capacity bitset with value semantics, set algebra and ordered
/// iteration over set positions. Used for vertex sets and edge sets.
template <std::size_t Words>
class Bits {
 public:
  static constexpr std::size_t kCapacity = 64 * Words;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::size_t*;
    using reference = std::size_t;

    Iterator() = default;
    Iterator(const Bits* bits, std::size_t pos) : bits_(bits), pos_(pos) {}

    std::size_t operator*() const { return pos_; }
    Iterator& operator++() {
      pos_ = bits_->next(pos_ + 1);
      return *this;
    }
    Iterator operator++(int) {
      Iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const Iterator& o) const { return pos_ == o.pos_; }

   private:
    const Bits* bits_ = nullptr;
    std::size_t pos_ = kCapacity;
  };

  constexpr Bits() = default;

  static Bits single(std::size_t i) {
    Bits b;
    b.set(i);
    return b;
  }

  /// {0, 1, ..., n-1}
  static Bits prefix(std::size_t n) {
    check(n == 0 ? 0 : n - 1);
    Bits b;
    for (std::size_t w = 0; w < Words; ++w) {
      if (n >= 64 * (w + 1)) {
        b.w_[w] = ~std::uint64_t{0};
      } else if (n > 64 * w) {
        b.w_[w] = (std::uint64_t{1} << (n - 64 * w)) - 1;
      }
    }
    return b;
  }

  void set(std::size_t i) {
    check(i);
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) {
    check(i);
    w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  [[nodiscard]] bool test(std::size_t i) const {
    return i < kCapacity && ((w_[i >> 6] >> (i & 63)) & 1U) != 0;
  }
  [[nodiscard]] bool contains(std::size_t i) const { return test(i); }

  [[nodiscard]] std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  [[nodiscard]] std::size_t size() const { return count(); }
  [[nodiscard]] bool empty() const {
    for (auto w : w_)
      if (w != 0) return false;
    return true;
  }
  [[nodiscard]] bool any() const { return !empty(); }

  /// Smallest set position >= from, or kCapacity.
  [[nodiscard]] std::size_t next(std::size_t from) const {
    if (from >= kCapacity) return kCapacity;
    std::size_t wi = from >> 6;
    std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w != 0) return 64 * wi + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == Words) return kCapacity;
      w = w_[wi];
    }
  }
  [[nodiscard]] std::size_t first() const { return next(0); }

  [[nodiscard]] Iterator begin() const { return Iterator(this, first()); }
  [[nodiscard]] Iterator end() const { return Iterator(this, kCapacity); }

  [[nodiscard]] bool is_subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if ((w_[i] & ~o.w_[i]) != 0) return false;
    return true;
  }
  [[nodiscard]] bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if ((w_[i] & o.w_[i]) != 0) return true;
    return false;
  }

  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < Words; ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < Words; ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator^=(const Bits& o) {
    for (std::size_t i = 0; i < Words; ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  /// Set difference.
  Bits& operator-=(const Bits& o) {
    for (std::size_t i = 0; i < Words; ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }
  friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

  friend bool operator==(const Bits&, const Bits&) = default;
  /// Total order: the set owning the smallest differing position sorts first.
  friend std::strong_ordering operator<=>(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < Words; ++i) {
      const std::uint64_t diff = a.w_[i] ^ b.w_[i];
      if (diff == 0) continue;
      const std::uint64_t low = diff & (~diff + 1);
      return (a.w_[i] & low) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  [[nodiscard]] std::uint64_t word(std::size_t i) const { return w_[i]; }

  [[nodiscard]] std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : w_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  static void check(std::size_t i) {
    if (i >= kCapacity) throw std::out_of_range("bit index exceeds bitset capacity");
  }

  std::array<std::uint64_t, Words> w_{};
};

struct BitsHash {
  template <std::size_t W>
  std::size_t operator()(const Bits<W>& b) const {
    return b.hash();
  }
};

}  // namespace smw
