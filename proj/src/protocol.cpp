#include "rcards/protocol.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rcards/combinatorics.hpp"
#include "rcards/errors.hpp"
#include "rcards/rng.hpp"

namespace rcards {

namespace {

bool is_sorted_set(const Hand& h) { return std::adjacent_find(h.begin(), h.end(), std::greater_equal<>()) == h.end(); }

void require_cards(const Hand& h, std::uint32_t deck, const char* what) {
  if (!is_sorted_set(h)) throw PreconditionViolated(std::string(what) + " must be sorted without repeats");
  if (!h.empty() && (h.front() < 1 || h.back() > deck))
    throw PreconditionViolated(std::string(what) + " has a card outside 1.." + std::to_string(deck));
}

bool disjoint(const Hand& x, const Hand& y) {
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return false;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return true;
}

}  // namespace

void validate_deal(const Deal& deal, const ProtocolParams& params) {
  if (deal.alice.size() != params.a || deal.bob.size() != params.b || deal.cath.size() != params.c)
    throw BadHandSize("deal sizes (" + std::to_string(deal.alice.size()) + "," + std::to_string(deal.bob.size()) +
                      "," + std::to_string(deal.cath.size()) + ") do not match " + params.to_string());
  const auto deck = static_cast<std::uint32_t>(params.deck());
  require_cards(deal.alice, deck, "Alice's hand");
  require_cards(deal.bob, deck, "Bob's hand");
  require_cards(deal.cath, deck, "Cath's hand");
  if (!disjoint(deal.alice, deal.bob) || !disjoint(deal.alice, deal.cath) || !disjoint(deal.bob, deal.cath))
    throw PreconditionViolated("hands of a deal must be disjoint");
}

Deal random_deal(const ProtocolParams& params, std::uint64_t seed) {
  params.validate();
  std::vector<Card> deck(params.deck());
  std::iota(deck.begin(), deck.end(), Card{1});
  Rng rng(seed);
  rng.shuffle(std::span<Card>(deck));
  Deal deal;
  deal.alice.assign(deck.begin(), deck.begin() + params.a);
  deal.bob.assign(deck.begin() + params.a, deck.begin() + params.a + params.b);
  deal.cath.assign(deck.begin() + params.a + params.b, deck.end());
  std::sort(deal.alice.begin(), deal.alice.end());
  std::sort(deal.bob.begin(), deal.bob.end());
  std::sort(deal.cath.begin(), deal.cath.end());
  return deal;
}

CardMap CardMap::identity(std::uint32_t deck) {
  std::vector<PointIndex> points(deck);
  std::iota(points.begin(), points.end(), PointIndex{0});
  return from_points(std::move(points));
}

CardMap CardMap::from_points(std::vector<PointIndex> points) {
  CardMap m;
  m.inverse_.assign(points.size(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] >= points.size() || m.inverse_[points[i]] != 0)
      throw PreconditionViolated("card map is not a bijection onto the points");
    m.inverse_[points[i]] = static_cast<Card>(i + 1);
  }
  m.forward_ = std::move(points);
  return m;
}

PointIndex CardMap::point_of(Card card) const {
  if (card < 1 || card > forward_.size()) throw IndexOutOfRange("card " + std::to_string(card) + " not in deck");
  return forward_[card - 1];
}

Card CardMap::card_at(PointIndex point) const {
  if (point >= inverse_.size()) throw IndexOutOfRange("point " + std::to_string(point) + " not in space");
  return inverse_[point];
}

bool EnumeratedAnnouncement::contains(const Hand& hand) const {
  return std::binary_search(hands.begin(), hands.end(), hand);
}

Hand bob_resolve(const EnumeratedAnnouncement& ann, const Hand& bob) {
  const Hand* found = nullptr;
  std::size_t count = 0;
  for (const Hand& h : ann.hands) {
    if (disjoint(h, bob)) {
      found = &h;
      ++count;
    }
  }
  if (count != 1) throw Ambiguous(count);
  return *found;
}

std::vector<Hand> cath_candidates(const EnumeratedAnnouncement& ann, const Hand& cath) {
  std::vector<Hand> out;
  for (const Hand& h : ann.hands)
    if (disjoint(h, cath)) out.push_back(h);
  return out;
}

GeometricProtocol::GeometricProtocol(const ProtocolParams& params, Budget budget)
    : params_((params.validate(), params)), space_(make_field(params.q), params.d + 1, budget) {}

std::uint64_t GeometricProtocol::hand_count() const {
  return saturating_mul(space_.direction_count(), binomial(params_.q, params_.k));
}

ImplicitAnnouncement GeometricProtocol::choose_announcement(const Hand& alice, std::uint64_t seed) const {
  if (alice.size() != params_.a)
    throw BadHandSize("Alice holds " + std::to_string(alice.size()) + " cards, expected " + std::to_string(params_.a));
  space_.budget().require_points(space_.size());
  require_cards(alice, deck(), "Alice's hand");

  Rng rng(seed);
  const std::vector<Direction> dirs = space_.directions();
  const Direction& dir = dirs[rng.below(dirs.size())];

  std::vector<Elem> offsets(space_.q());
  std::iota(offsets.begin(), offsets.end(), Elem{0});
  rng.shuffle(std::span<Elem>(offsets));
  offsets.resize(params_.k);
  std::sort(offsets.begin(), offsets.end());

  std::vector<PointIndex> inside = space_.slicing_points(Slicing{dir, offsets});
  std::vector<PointIndex> outside;
  outside.reserve(deck() - inside.size());
  std::vector<char> taken(deck(), 0);
  for (PointIndex p : inside) taken[p] = 1;
  for (PointIndex p = 0; p < deck(); ++p)
    if (!taken[p]) outside.push_back(p);
  rng.shuffle(std::span<PointIndex>(inside));
  rng.shuffle(std::span<PointIndex>(outside));

  std::vector<PointIndex> points(deck());
  std::size_t next_in = 0, next_out = 0;
  auto in_alice = alice.begin();
  for (Card card = 1; card <= deck(); ++card) {
    if (in_alice != alice.end() && *in_alice == card) {
      points[card - 1] = inside[next_in++];
      ++in_alice;
    } else {
      points[card - 1] = outside[next_out++];
    }
  }
  return ImplicitAnnouncement{CardMap::from_points(std::move(points)), params_.k};
}

Hand GeometricProtocol::cards_of(const ImplicitAnnouncement& ann, const std::vector<PointIndex>& points) const {
  Hand out;
  out.reserve(points.size());
  for (PointIndex p : points) out.push_back(ann.map.card_at(p));
  std::sort(out.begin(), out.end());
  return out;
}

EnumeratedAnnouncement GeometricProtocol::enumerate(const Announcement& ann) const {
  if (const auto* listed = std::get_if<EnumeratedAnnouncement>(&ann)) return *listed;
  const auto& implicit = std::get<ImplicitAnnouncement>(ann);
  if (implicit.map.deck() != deck()) throw PreconditionViolated("card map does not cover the deck");
  if (implicit.k < 1 || implicit.k >= params_.q) throw PreconditionViolated("announcement k outside [1, q-1]");

  const std::uint64_t total =
      saturating_mul(space_.direction_count(), binomial(params_.q, implicit.k));
  space_.budget().require_hands(total);
  space_.budget().require_points(space_.size());

  EnumeratedAnnouncement out;
  out.hands.reserve(total);
  const std::uint32_t q = space_.q();
  std::vector<std::vector<Card>> buckets(q);
  std::vector<Point> points;
  points.reserve(deck());
  for (PointIndex p = 0; p < deck(); ++p) points.push_back(space_.point(p));

  for (const Direction& dir : space_.directions()) {
    for (auto& b : buckets) b.clear();
    for (PointIndex p = 0; p < deck(); ++p) buckets[space_.level(dir, points[p])].push_back(implicit.map.card_at(p));
    auto combo = first_combination(implicit.k);
    do {
      Hand h;
      h.reserve(std::uint64_t{implicit.k} * space_.hyperplane_size());
      for (std::uint32_t t : combo) h.insert(h.end(), buckets[t].begin(), buckets[t].end());
      std::sort(h.begin(), h.end());
      out.hands.push_back(std::move(h));
    } while (next_combination(std::span<std::uint32_t>(combo), q));
  }
  std::sort(out.hands.begin(), out.hands.end());
  return out;
}

bool GeometricProtocol::contains(const ImplicitAnnouncement& ann, const Hand& hand) const {
  if (hand.size() != std::uint64_t{ann.k} * space_.hyperplane_size()) return false;
  require_cards(hand, deck(), "hand");
  std::vector<PointIndex> points;
  points.reserve(hand.size());
  for (Card c : hand) points.push_back(ann.map.point_of(c));
  return space_.is_slicing(std::span<const PointIndex>(points), ann.k).has_value();
}

bool GeometricProtocol::same_announcement(const Announcement& lhs, const Announcement& rhs) const {
  return enumerate(lhs) == enumerate(rhs);
}

void GeometricProtocol::check_witness_preconditions(const Hand& x, const Hand& cath,
                                                    const ImplicitAnnouncement& ann) const {
  if (ann.map.deck() != deck() || ann.k != params_.k)
    throw PreconditionViolated("announcement does not belong to this protocol");
  require_cards(x, deck(), "tuple");
  require_cards(cath, deck(), "Cath's hand");
  if (x.empty() || x.size() > params_.k) throw PreconditionViolated("tuple must have between 1 and k cards");
  if (!disjoint(x, cath)) throw PreconditionViolated("tuple meets Cath's hand");
  if (cath.size() > params_.c) throw PreconditionViolated("Cath holds more than c cards");
  const std::uint64_t c = params_.c, k = params_.k;
  if (std::max(c + k, c * k) > params_.q) throw PreconditionViolated("max{c+k, ck} exceeds q");
  space_.budget().require_points(space_.size());
}

// Offsets of dir whose hyperplanes miss every point of cath, ascending.
std::vector<Elem> GeometricProtocol::free_offsets(const Direction& dir, const std::vector<Point>& cath_points) const {
  std::vector<char> hit(space_.q(), 0);
  for (const Point& y : cath_points) hit[space_.level(dir, y)] = 1;
  std::vector<Elem> out;
  for (Elem t = 0; t < space_.q(); ++t)
    if (!hit[t]) out.push_back(t);
  return out;
}

Hand GeometricProtocol::construct_containing_hand(const Hand& x, const Hand& cath,
                                                  const ImplicitAnnouncement& ann) const {
  check_witness_preconditions(x, cath, ann);
  std::vector<Point> through, avoid;
  for (Card card : x) through.push_back(space_.point(ann.map.point_of(card)));
  for (Card card : cath) avoid.push_back(space_.point(ann.map.point_of(card)));

  const Direction dir = space_.find_avoiding_subspace(avoid, through, params_.k);

  std::vector<Elem> chosen;
  for (const Point& p : through) chosen.push_back(space_.level(dir, p));
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  // At least q - c >= k hyperplanes of dir miss Cath; pad with the lowest ones.
  for (Elem t : free_offsets(dir, avoid)) {
    if (chosen.size() == params_.k) break;
    if (!std::binary_search(chosen.begin(), chosen.end(), t)) {
      chosen.insert(std::upper_bound(chosen.begin(), chosen.end(), t), t);
    }
  }
  return cards_of(ann, space_.slicing_points(Slicing{dir, chosen}));
}

Hand GeometricProtocol::construct_excluding_hand(const Hand& x, const Hand& cath,
                                                 const ImplicitAnnouncement& ann) const {
  check_witness_preconditions(x, cath, ann);
  if (cath.empty()) throw EmptyCath();
  std::vector<Point> avoid;
  for (Card card : cath) avoid.push_back(space_.point(ann.map.point_of(card)));

  // A hyperplane through both x and a card of Cath: every slicing built from
  // its parallel class while avoiding Cath also avoids x.
  const Point x0 = space_.point(ann.map.point_of(x.front()));
  const Point diff = space_.sub(x0, avoid.front());
  Direction dir;
  for (const Direction& candidate : space_.directions()) {
    if (space_.level(candidate, diff) == 0) {
      dir = candidate;
      break;
    }
  }
  std::vector<Elem> offsets = free_offsets(dir, avoid);
  offsets.resize(params_.k);
  return cards_of(ann, space_.slicing_points(Slicing{dir, offsets}));
}

Transcript GeometricProtocol::run_exchange(const Deal& deal, std::uint64_t seed) const {
  validate_deal(deal, params_);
  Transcript t;
  t.chosen = choose_announcement(deal.alice, seed);
  t.announcement = enumerate(t.chosen);
  t.bob_resolution = bob_resolve(t.announcement, deal.bob);
  if (t.bob_resolution != deal.alice) throw Error("Bob resolved a hand other than Alice's");
  t.bob_second_announcement = deal.cath;
  t.cath_candidate_count = cath_candidates(t.announcement, deal.cath).size();
  return t;
}

}  // namespace rcards
