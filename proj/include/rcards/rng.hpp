#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace rcards {

// Seeded generator with output fixed across standard libraries: mt19937_64
// (whose sequence the standard pins down), rejection-sampled bounded draws,
// and a descending Fisher-Yates shuffle. std::uniform_int_distribution and
// std::shuffle are implementation-defined and deliberately not used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rcards
