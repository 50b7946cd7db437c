#include "rcards/verifier.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rcards/combinatorics.hpp"
#include "rcards/errors.hpp"

namespace rcards {

namespace {

std::string render(const Hand& h) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
  os << "}";
  return os.str();
}

// membership[h * (deck + 1) + card] == 1 iff card is in hand h.
class MembershipTable {
 public:
  MembershipTable(const EnumeratedAnnouncement& ann, std::uint32_t deck)
      : stride_(std::size_t{deck} + 1), bits_(ann.hands.size() * stride_, 0) {
    for (std::size_t h = 0; h < ann.hands.size(); ++h)
      for (Card c : ann.hands[h]) {
        if (c < 1 || c > deck) throw PreconditionViolated("announced hand has a card outside the deck");
        bits_[h * stride_ + c] = 1;
      }
  }

  bool has(std::size_t hand, Card card) const { return bits_[hand * stride_ + card] != 0; }

  bool avoids(std::size_t hand, const Hand& cards) const {
    return std::none_of(cards.begin(), cards.end(), [&](Card c) { return has(hand, c); });
  }

  bool covers(std::size_t hand, const Hand& cards) const {
    return std::all_of(cards.begin(), cards.end(), [&](Card c) { return has(hand, c); });
  }

 private:
  std::size_t stride_;
  std::vector<std::uint8_t> bits_;
};

std::uint32_t deck_of(const ProtocolParams& params) { return static_cast<std::uint32_t>(params.deck()); }

std::optional<Violation> first_violation_for(const MembershipTable& table, std::size_t hand_count,
                                             std::uint32_t deck, const Hand& cath, unsigned k) {
  std::vector<std::size_t> candidates;
  for (std::size_t h = 0; h < hand_count; ++h)
    if (table.avoids(h, cath)) candidates.push_back(h);
  if (candidates.empty()) return std::nullopt;  // no deal is consistent with this Cath hand

  Hand rest;
  for (Card c = 1; c <= deck; ++c)
    if (!std::binary_search(cath.begin(), cath.end(), c)) rest.push_back(c);

  const unsigned max_size = static_cast<unsigned>(std::min<std::size_t>(k, rest.size()));
  Hand x;
  for (unsigned size = 1; size <= max_size; ++size) {
    auto combo = first_combination(size);
    do {
      x.clear();
      for (std::uint32_t i : combo) x.push_back(rest[i]);
      std::size_t containing = 0;
      for (std::size_t h : candidates)
        if (table.covers(h, x)) ++containing;
      if (containing == 0)
        return Violation{ViolationKind::NoContainingHand, cath, x, {},
                         "Cath holding " + render(cath) + " knows Alice does not hold all of " + render(x)};
      if (containing == candidates.size())
        return Violation{ViolationKind::NoExcludingHand, cath, x, {},
                         "Cath holding " + render(cath) + " knows Alice holds all of " + render(x)};
    } while (next_combination(std::span<std::uint32_t>(combo), static_cast<std::uint32_t>(rest.size())));
  }
  return std::nullopt;
}

std::uint64_t tuple_count(std::uint64_t free_cards, unsigned k) {
  std::uint64_t total = 0;
  for (unsigned j = 1; j <= k && j <= free_cards; ++j) total = saturating_add(total, binomial(free_cards, j));
  return total;
}

std::size_t union_size(const Hand& x, const Hand& y) {
  std::size_t common = 0;
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) {
      ++common;
      ++i;
      ++j;
    } else if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return x.size() + y.size() - common;
}

}  // namespace

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotInformative:
      return "NotInformative";
    case ViolationKind::NoContainingHand:
      return "NoContainingHand";
    case ViolationKind::NoExcludingHand:
      return "NoExcludingHand";
  }
  return "?";
}

std::optional<Violation> check_informative(const EnumeratedAnnouncement& ann, const ProtocolParams& params,
                                           const Budget& budget) {
  const std::uint64_t n = ann.hands.size();
  budget.require_checks(saturating_mul(n * (n ? n - 1 : 0) / 2, params.a));
  const std::uint64_t limit = params.a + params.c;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Hand& x = ann.hands[i];
      const Hand& y = ann.hands[j];
      const std::size_t u = union_size(x, y);
      if (u > limit) continue;

      Hand cath;
      std::set_difference(y.begin(), y.end(), x.begin(), x.end(), std::back_inserter(cath));
      for (Card c = 1; c <= deck_of(params) && cath.size() < params.c; ++c) {
        if (!std::binary_search(x.begin(), x.end(), c) && !std::binary_search(y.begin(), y.end(), c)) cath.push_back(c);
      }
      std::sort(cath.begin(), cath.end());
      return Violation{ViolationKind::NotInformative, cath, {}, {x, y},
                       "hands " + render(x) + " and " + render(y) + " both fit in " + std::to_string(u) +
                           " <= a + c = " + std::to_string(limit) + " cards"};
    }
  }
  return std::nullopt;
}

std::uint64_t min_pairwise_union(const EnumeratedAnnouncement& ann) {
  std::uint64_t best = 0;
  for (std::size_t i = 0; i < ann.hands.size(); ++i)
    for (std::size_t j = i + 1; j < ann.hands.size(); ++j) {
      const std::uint64_t u = union_size(ann.hands[i], ann.hands[j]);
      if (best == 0 || u < best) best = u;
    }
  return best;
}

std::optional<Violation> check_k_safe(const EnumeratedAnnouncement& ann, const ProtocolParams& params, unsigned k,
                                      const Budget& budget) {
  const std::uint32_t deck = deck_of(params);
  const std::uint64_t caths = binomial(deck, params.c);
  budget.require_checks(saturating_mul(saturating_mul(caths, tuple_count(deck - params.c, k)), ann.hands.size()));

  const MembershipTable table(ann, deck);
  auto combo = first_combination(static_cast<std::uint32_t>(params.c));
  Hand cath(params.c);
  do {
    for (std::size_t i = 0; i < combo.size(); ++i) cath[i] = combo[i] + 1;
    if (auto v = first_violation_for(table, ann.hands.size(), deck, cath, k)) return v;
  } while (next_combination(std::span<std::uint32_t>(combo), deck));
  return std::nullopt;
}

std::optional<Violation> check_k_safe_for(const EnumeratedAnnouncement& ann, const ProtocolParams& params,
                                          const Hand& cath, unsigned k) {
  const std::uint32_t deck = deck_of(params);
  const MembershipTable table(ann, deck);
  return first_violation_for(table, ann.hands.size(), deck, cath, k);
}

bool replays(const Violation& v, const EnumeratedAnnouncement& ann, const ProtocolParams& params) {
  if (v.cath_hand.size() != params.c) return false;
  const std::vector<Hand> candidates = cath_candidates(ann, v.cath_hand);
  auto holds = [&](const Hand& h) { return std::includes(h.begin(), h.end(), v.tuple.begin(), v.tuple.end()); };
  switch (v.kind) {
    case ViolationKind::NotInformative: {
      if (v.pair.size() != 2 || v.pair[0] == v.pair[1]) return false;
      if (!ann.contains(v.pair[0]) || !ann.contains(v.pair[1])) return false;
      // Alice holds pair[0], Cath holds cath_hand: both hands fit in A u C.
      Hand alice_and_cath;
      std::set_union(v.pair[0].begin(), v.pair[0].end(), v.cath_hand.begin(), v.cath_hand.end(),
                     std::back_inserter(alice_and_cath));
      if (alice_and_cath.size() != v.pair[0].size() + v.cath_hand.size()) return false;
      std::size_t inside = 0;
      for (const Hand& h : ann.hands)
        if (std::includes(alice_and_cath.begin(), alice_and_cath.end(), h.begin(), h.end())) ++inside;
      return inside >= 2;
    }
    case ViolationKind::NoContainingHand:
      return !candidates.empty() && std::none_of(candidates.begin(), candidates.end(), holds);
    case ViolationKind::NoExcludingHand:
      return !candidates.empty() && std::all_of(candidates.begin(), candidates.end(), holds);
  }
  return false;
}

ProtocolReport check_protocol(const ProtocolParams& params, unsigned safety_k, const Budget& budget) {
  const GeometricProtocol protocol(params, budget);
  const EnumeratedAnnouncement ann =
      protocol.enumerate(ImplicitAnnouncement{CardMap::identity(protocol.deck()), params.k});
  ProtocolReport report;
  report.params = params;
  report.safety_k = safety_k;
  report.hands = ann.hands.size();
  report.min_union = min_pairwise_union(ann);
  report.informative_violation = check_informative(ann, params, budget);
  report.safety_violation = check_k_safe(ann, params, safety_k, budget);
  return report;
}

std::uint64_t oracle_slicing_count(const ProtocolParams& params, const Budget& budget) {
  params.validate();
  const FiniteField field = make_field(params.q);
  const unsigned n = params.d + 1;
  const std::uint64_t points = checked_pow(params.q, n);
  budget.require_points(points);
  budget.require_checks(saturating_mul(saturating_mul(points, points), binomial(params.q, params.k)));

  std::vector<std::vector<Elem>> coords(points, std::vector<Elem>(n));
  for (std::uint64_t i = 0; i < points; ++i) {
    std::uint64_t rest = i;
    for (unsigned j = 0; j < n; ++j) {
      coords[i][j] = static_cast<Elem>(rest % params.q);
      rest /= params.q;
    }
  }

  std::set<std::vector<std::uint32_t>> slicings;
  std::vector<Elem> level(points);
  for (std::uint64_t v = 1; v < points; ++v) {
    for (std::uint64_t i = 0; i < points; ++i) {
      Elem acc = 0;
      for (unsigned j = 0; j < n; ++j) acc = field.add(acc, field.mul(coords[v][j], coords[i][j]));
      level[i] = acc;
    }
    auto offsets = first_combination(params.k);
    do {
      std::vector<std::uint32_t> members;
      for (std::uint64_t i = 0; i < points; ++i)
        if (std::find(offsets.begin(), offsets.end(), level[i]) != offsets.end())
          members.push_back(static_cast<std::uint32_t>(i));
      slicings.insert(std::move(members));
    } while (next_combination(std::span<std::uint32_t>(offsets), static_cast<std::uint32_t>(params.q)));
  }
  return slicings.size();
}

}  // namespace rcards
