#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "rcards/budget.hpp"
#include "rcards/geometry.hpp"
#include "rcards/params.hpp"

namespace rcards {

// Cards are 1..deck.
using Card = std::uint32_t;
// A set of cards, always kept sorted ascending without duplicates.
using Hand = std::vector<Card>;

struct Deal {
  Hand alice;
  Hand bob;
  Hand cath;

  friend bool operator==(const Deal&, const Deal&) = default;
};

// Throws BadHandSize on wrong sizes and PreconditionViolated if the hands
// are not a sorted partition of 1..deck.
void validate_deal(const Deal& deal, const ProtocolParams& params);

Deal random_deal(const ProtocolParams& params, std::uint64_t seed);

/// Bijection between cards and points of F_q^(d+1).
class CardMap {
 public:
  // Card i goes to point index i - 1.
  static CardMap identity(std::uint32_t deck);
  // points[i] is the point of card i + 1; must be a permutation of 0..deck-1.
  static CardMap from_points(std::vector<PointIndex> points);

  std::uint32_t deck() const { return static_cast<std::uint32_t>(forward_.size()); }
  PointIndex point_of(Card card) const;
  Card card_at(PointIndex point) const;
  const std::vector<PointIndex>& points() const { return forward_; }

  friend bool operator==(const CardMap& lhs, const CardMap& rhs) { return lhs.forward_ == rhs.forward_; }

 private:
  std::vector<PointIndex> forward_;
  std::vector<Card> inverse_;
};

// The set of hands X with f(X) a k-slicing, kept as (f, k).
struct ImplicitAnnouncement {
  CardMap map;
  unsigned k = 0;

  friend bool operator==(const ImplicitAnnouncement&, const ImplicitAnnouncement&) = default;
};

// Lexicographically sorted list of sorted hands.
struct EnumeratedAnnouncement {
  std::vector<Hand> hands;

  bool contains(const Hand& hand) const;
  friend bool operator==(const EnumeratedAnnouncement&, const EnumeratedAnnouncement&) = default;
};

using Announcement = std::variant<ImplicitAnnouncement, EnumeratedAnnouncement>;

/// The unique announced hand disjoint from Bob's hand; Ambiguous otherwise.
Hand bob_resolve(const EnumeratedAnnouncement& ann, const Hand& bob);

/// Every announced hand disjoint from Cath's hand, in announcement order.
std::vector<Hand> cath_candidates(const EnumeratedAnnouncement& ann, const Hand& cath);

struct Transcript {
  ImplicitAnnouncement chosen;
  EnumeratedAnnouncement announcement;
  Hand bob_resolution;
  Hand bob_second_announcement;  // Cath's hand, announced by Bob
  std::size_t cath_candidate_count = 0;
};

/**
 * The geometric protocol for one parameter set: Alice maps the deck onto
 * F_q^(d+1) so that her hand is a k-slicing and announces every hand that
 * the same map sends to a k-slicing.
 */
class GeometricProtocol {
 public:
  // Validates params (BadParams).
  explicit GeometricProtocol(const ProtocolParams& params, Budget budget = {});

  const ProtocolParams& params() const { return params_; }
  const Space& space() const { return space_; }
  std::uint32_t deck() const { return static_cast<std::uint32_t>(params_.deck()); }

  // Number of k-slicings, which is the number of announced hands.
  std::uint64_t hand_count() const;

  /// Seeded uniform choice of direction, k offsets, bijection from Alice's
  /// hand onto the slicing and bijection from the rest of the deck onto the
  /// remaining points. BadHandSize unless |alice| = a.
  ImplicitAnnouncement choose_announcement(const Hand& alice, std::uint64_t seed) const;

  /// All announced hands, sorted. SizeGuard when over the hand budget.
  EnumeratedAnnouncement enumerate(const Announcement& ann) const;

  /// Membership without enumeration: f(hand) is a k-slicing.
  bool contains(const ImplicitAnnouncement& ann, const Hand& hand) const;

  /// Equal iff the enumerations agree; different maps can give one announcement.
  bool same_announcement(const Announcement& lhs, const Announcement& rhs) const;

  /// An announced hand containing x and disjoint from cath. Requires
  /// 1 <= |x| <= k, x disjoint from cath, |cath| <= c and max{c+k, ck} <= q.
  Hand construct_containing_hand(const Hand& x, const Hand& cath, const ImplicitAnnouncement& ann) const;

  /// An announced hand disjoint from cath that misses the smallest card of x.
  /// Same requirements as above plus a nonempty cath (EmptyCath otherwise).
  Hand construct_excluding_hand(const Hand& x, const Hand& cath, const ImplicitAnnouncement& ann) const;

  /// Alice announces, Bob resolves her hand and announces Cath's.
  Transcript run_exchange(const Deal& deal, std::uint64_t seed) const;

 private:
  Hand cards_of(const ImplicitAnnouncement& ann, const std::vector<PointIndex>& points) const;
  void check_witness_preconditions(const Hand& x, const Hand& cath, const ImplicitAnnouncement& ann) const;
  std::vector<Elem> free_offsets(const Direction& dir, const std::vector<Point>& cath_points) const;

  ProtocolParams params_;
  Space space_;
};

}  // namespace rcards
