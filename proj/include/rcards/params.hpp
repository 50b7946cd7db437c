#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rcards {

/// Size (a, b, c) of a deal together with the geometry (q, d, k) that realizes it:
/// a = k q^d and a + b + c = q^(d+1).
struct ProtocolParams {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  std::uint64_t q = 0;
  unsigned d = 0;
  unsigned k = 0;

  std::uint64_t deck() const { return a + b + c; }

  /// Throws BadParams unless q is a prime power, 1 <= k <= q - 1, d >= 1,
  /// b >= 1 and both identities hold exactly.
  void validate() const;

  /// Fills a and b from (q, d, k, c). Throws BadParams when b would be < 1.
  static ProtocolParams from_geometry(std::uint64_t q, unsigned d, unsigned k, std::uint64_t c);

  std::string to_string() const;

  friend bool operator==(const ProtocolParams&, const ProtocolParams&) = default;
};

/// A parameter set with both conditions of the main theorem evaluated:
///   cond1: c < k q^d - k^2 q^(d-1)
///   cond2: max{c + k, c k} <= q
struct SizeRecord {
  ProtocolParams params;
  bool cond1 = false;
  bool cond2 = false;
  bool theorem_applies = false;
};

SizeRecord check_conditions(const ProtocolParams& params);

/// min{(k+1) q^d, 2k q^d - k^2 q^(d-1)}: no two distinct k-slicings of
/// F_q^(d+1) have a smaller union. BadParams unless 1 <= k <= q - 1.
std::uint64_t slicing_gap_lower_bound(std::uint64_t q, unsigned d, unsigned k);

/// k q^d - k^2 q^(d-1) = k q^(d-1) (q - k), the right-hand side of cond1.
std::uint64_t informativity_margin(std::uint64_t q, unsigned d, unsigned k);

struct PrimePowerChoice {
  std::uint64_t smallest;      // least prime power > n
  std::uint64_t power_of_two;  // least 2^l > n; always in (n, 2n]
};

PrimePowerChoice prime_power_in_range(std::uint64_t n);

/// Picks q as the smallest prime power in (kc+1, 2(kc+1)], then a = k q^d and
/// b = q^(d+1) - a - c. The result always satisfies both conditions.
SizeRecord derive_params(unsigned k, std::uint64_t c, unsigned d);

/// Every (q, d, k, c) with q^(d+1) <= max_deck, 1 <= k <= q - 1, c >= 0 and
/// b >= 1, sorted by deck size, then q, d, k, c.
std::vector<SizeRecord> enumerate_sizes(std::uint64_t max_deck);

/// q^e with overflow detection (BadParams).
std::uint64_t checked_pow(std::uint64_t q, unsigned e);

}  // namespace rcards
