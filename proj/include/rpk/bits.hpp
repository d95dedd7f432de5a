#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace rpk {

/// Subset of a carrier with at most 64 elements; bit i holds element i.
using Bits = std::uint64_t;

/// Hard cap on carrier sizes. Everything in this library is driven by
/// exhaustive scans over Bits-encoded subsets.
inline constexpr int kMaxCarrier = 64;

namespace bits {

inline constexpr Bits one(int i) { return Bits{1} << i; }

inline constexpr bool test(Bits s, int i) { return (s >> i) & Bits{1}; }

inline constexpr int count(Bits s) { return std::popcount(s); }

inline constexpr bool subset(Bits a, Bits b) { return (a & ~b) == 0; }

/// All elements of an n-element carrier.
inline constexpr Bits full(int n) {
  return n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1;
}

inline std::vector<int> to_vector(Bits s) {
  std::vector<int> out;
  while (s != 0) {
    int i = std::countr_zero(s);
    out.push_back(i);
    s &= s - 1;
  }
  return out;
}

template <typename F>
inline void for_each(Bits s, F&& f) {
  while (s != 0) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

}  // namespace bits
}  // namespace rpk
