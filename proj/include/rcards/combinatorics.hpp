#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

namespace rcards {

// C(n, r), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // acc * (n - r + i) is divisible by i; split i across both factors first.
    const std::uint64_t g = std::gcd(acc, i);
    if (__builtin_mul_overflow(acc / g, (n - r + i) / (i / g), &acc)) return std::numeric_limits<std::uint64_t>::max();
  }
  return acc;
}

inline std::uint64_t saturating_mul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out;
  if (__builtin_mul_overflow(x, y, &out)) return std::numeric_limits<std::uint64_t>::max();
  return out;
}

inline std::uint64_t saturating_add(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out;
  if (__builtin_add_overflow(x, y, &out)) return std::numeric_limits<std::uint64_t>::max();
  return out;
}

// First r-combination of {0..n-1} in lexicographic order.
inline std::vector<std::uint32_t> first_combination(std::uint32_t r) {
  std::vector<std::uint32_t> c(r);
  for (std::uint32_t i = 0; i < r; ++i) c[i] = i;
  return c;
}

// Advances c to the next r-combination of {0..n-1}; false after the last one.
inline bool next_combination(std::span<std::uint32_t> c, std::uint32_t n) {
  const std::size_t r = c.size();
  std::size_t i = r;
  while (i > 0) {
    --i;
    if (c[i] < n - r + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace rcards
