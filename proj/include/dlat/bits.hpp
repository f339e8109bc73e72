#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace dlat {

/** Fixed-capacity bit set over dense element indices.
    Comparison orders bit sets as unsigned integers (word n-1 most significant),
    which is a linear extension of the subset order. */
class Bits {
public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int capacity() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool intersects(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  /// Index of the next set bit at or after `from`, or -1.
  int next(int from) const {
    for (int k = from >> 6; k < static_cast<int>(w_.size()); ++k) {
      std::uint64_t w = w_[k];
      if (k == (from >> 6)) w &= ~std::uint64_t{0} << (from & 63);
      if (w) return k * 64 + std::countr_zero(w);
    }
    return -1;
  }

  Bits& operator&=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }

  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }

  std::strong_ordering operator<=>(const Bits& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    for (std::size_t k = w_.size(); k-- > 0;)
      if (auto c = w_[k] <=> o.w_[k]; c != 0) return c;
    return std::strong_ordering::equal;
  }

private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace dlat
