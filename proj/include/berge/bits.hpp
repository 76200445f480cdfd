#pragma once

#include <bit>
#include <cstdint>

namespace berge {

// Set of node ids in [0, 128). Bipartite graphs cap each part at 64 nodes,
// so the unified node space (X first, then Y) always fits.
struct Mask128 {
  std::uint64_t lo = 0, hi = 0;

  static Mask128 single(int i) {
    Mask128 m;
    m.set(i);
    return m;
  }

  void set(int i) {
    if (i < 64)
      lo |= std::uint64_t(1) << i;
    else
      hi |= std::uint64_t(1) << (i - 64);
  }
  void clear(int i) {
    if (i < 64)
      lo &= ~(std::uint64_t(1) << i);
    else
      hi &= ~(std::uint64_t(1) << (i - 64));
  }
  bool test(int i) const {
    if (i < 64) return (lo >> i) & 1;
    return (hi >> (i - 64)) & 1;
  }
  bool none() const { return lo == 0 && hi == 0; }
  bool any() const { return !none(); }
  int count() const { return std::popcount(lo) + std::popcount(hi); }

  // Lowest set bit, -1 if empty.
  int first() const {
    if (lo) return std::countr_zero(lo);
    if (hi) return 64 + std::countr_zero(hi);
    return -1;
  }
  // Lowest set bit strictly above i, -1 if none.
  int next(int i) const {
    Mask128 m = *this;
    if (i < 63) {
      m.lo &= ~((std::uint64_t(2) << i) - 1);
    } else {
      m.lo = 0;
      if (i > 63) m.hi &= ~((std::uint64_t(2) << (i - 64)) - 1);
    }
    return m.first();
  }
  int pop_first() {
    int i = first();
    if (i >= 0) clear(i);
    return i;
  }

  Mask128 operator|(const Mask128& o) const { return {lo | o.lo, hi | o.hi}; }
  Mask128 operator&(const Mask128& o) const { return {lo & o.lo, hi & o.hi}; }
  Mask128 operator~() const { return {~lo, ~hi}; }
  Mask128& operator|=(const Mask128& o) {
    lo |= o.lo;
    hi |= o.hi;
    return *this;
  }
  Mask128& operator&=(const Mask128& o) {
    lo &= o.lo;
    hi &= o.hi;
    return *this;
  }
  Mask128 and_not(const Mask128& o) const { return {lo & ~o.lo, hi & ~o.hi}; }
  bool operator==(const Mask128& o) const = default;
  bool is_subset_of(const Mask128& o) const {
    return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0;
  }
  bool intersects(const Mask128& o) const {
    return (lo & o.lo) != 0 || (hi & o.hi) != 0;
  }
};

}  // namespace berge
