#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcards/budget.hpp"
#include "rcards/params.hpp"
#include "rcards/protocol.hpp"

namespace rcards {

enum class ViolationKind { NotInformative, NoContainingHand, NoExcludingHand };

const char* to_string(ViolationKind kind);

// A counterexample that can be replayed against the announcement.
struct Violation {
  ViolationKind kind;
  Hand cath_hand;
  Hand tuple;                  // safety kinds: the tuple X
  std::vector<Hand> pair;      // NotInformative: the two hands
  std::string detail;
};

// The checks below return nullopt when the property holds.

/// Informative iff every pair of distinct hands has |X u Y| > a + c.
/// The first offending pair in announcement order is reported; cath_hand is
/// then a c-set inside Y \ X (padded from outside X u Y) that lets both
/// hands fit in Alice's and Cath's cards.
std::optional<Violation> check_informative(const EnumeratedAnnouncement& ann, const ProtocolParams& params,
                                           const Budget& budget = {});

/// Smallest |X u Y| over distinct announced hands (0 for fewer than two hands).
std::uint64_t min_pairwise_union(const EnumeratedAnnouncement& ann);

/// Exhaustive k-safety: every Cath hand C avoided by at least one announced
/// hand, and every nonempty X outside C with |X| <= k, must have a candidate
/// containing X and a candidate not containing X. Cath hands run in
/// lexicographic order and tuples by size, then lexicographically, so the
/// reported violation is the first one in that order.
std::optional<Violation> check_k_safe(const EnumeratedAnnouncement& ann, const ProtocolParams& params,
                                      unsigned k, const Budget& budget = {});

/// The same check restricted to one Cath hand.
std::optional<Violation> check_k_safe_for(const EnumeratedAnnouncement& ann, const ProtocolParams& params,
                                          const Hand& cath, unsigned k);

/// True if re-filtering the announcement by the witness reproduces the violation.
bool replays(const Violation& v, const EnumeratedAnnouncement& ann, const ProtocolParams& params);

struct ProtocolReport {
  ProtocolParams params;
  unsigned safety_k = 0;
  std::uint64_t hands = 0;
  std::uint64_t min_union = 0;
  std::optional<Violation> informative_violation;
  std::optional<Violation> safety_violation;

  bool informative() const { return !informative_violation; }
  bool k_safe() const { return !safety_violation; }
};

/**
 * Verifies the whole protocol through its canonical announcement (identity
 * card map). Every other announcement A_k[f] is the image of the canonical
 * one under a relabelling of the deck, and both properties are invariant
 * under relabelling, so the canonical verdict covers all of them.
 */
ProtocolReport check_protocol(const ProtocolParams& params, unsigned safety_k, const Budget& budget = {});

/// Number of distinct k-slicings of F_q^(d+1), counted by brute force over
/// every nonzero normal vector and every k-set of offsets, deduplicated by
/// point set. Independent of the enumeration used by the protocol.
std::uint64_t oracle_slicing_count(const ProtocolParams& params, const Budget& budget = {});

}  // namespace rcards
