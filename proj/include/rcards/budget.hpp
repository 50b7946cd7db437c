#pragma once

#include <cstdint>
#include <string>

#include "rcards/errors.hpp"

namespace rcards {

// Limits on what may be materialized. Anything larger must stay in implicit form.
struct Budget {
  std::uint64_t max_points = 65536;          // points of F_q^{d+1}
  std::uint64_t max_hands = 200000;          // hands in an enumerated announcement
  std::uint64_t max_checks = 4'000'000'000;  // hand-vs-tuple tests in exhaustive verification

  void require_points(std::uint64_t n) const {
    if (n > max_points)
      throw SizeGuard("space has " + std::to_string(n) + " points, budget is " + std::to_string(max_points));
  }
  void require_hands(std::uint64_t n) const {
    if (n > max_hands)
      throw SizeGuard("announcement has " + std::to_string(n) + " hands, budget is " + std::to_string(max_hands));
  }
  void require_checks(std::uint64_t n) const {
    if (n > max_checks)
      throw SizeGuard("verification needs " + std::to_string(n) + " checks, budget is " + std::to_string(max_checks));
  }
};

}  // namespace rcards
