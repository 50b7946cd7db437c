#include "rcards/documents.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "rcards/errors.hpp"

namespace rcards::documents {

namespace {

// Literals built in code are signed; parsed text is unsigned. Both count.
bool is_non_negative(const Json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

template <typename T>
T get_number(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw DocumentError(std::string("missing field '") + key + "'");
  const Json& v = obj.at(key);
  if (!is_non_negative(v)) throw DocumentError(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<T>();
}

std::optional<std::uint64_t> get_seed(const Json& doc) {
  if (!doc.contains("seed")) return std::nullopt;
  return get_number<std::uint64_t>(doc, "seed");
}

Json hand_json(const Hand& h) { return Json(h); }

Json card_map_json(const CardMap& map, const Space& space) {
  Json out = Json::array();
  for (PointIndex p : map.points()) out.push_back(point_json(space.point(p)));
  return out;
}

CardMap parse_card_map(const Json& value, const Space& space) {
  if (!value.is_array()) throw DocumentError("'card_map' must be an array of coordinate tuples");
  std::vector<PointIndex> points;
  for (const Json& entry : value) {
    if (!entry.is_array() || entry.size() != space.dimension())
      throw DocumentError("card_map entry has the wrong dimension");
    Point p;
    for (const Json& coord : entry) {
      if (!is_non_negative(coord) || coord.get<std::uint64_t>() >= space.q())
        throw DocumentError("card_map coordinate outside the field");
      p.coords.push_back(coord.get<Elem>());
    }
    points.push_back(static_cast<PointIndex>(space.index(p)));
  }
  if (points.size() != space.size()) throw DocumentError("card_map does not cover the deck");
  try {
    return CardMap::from_points(std::move(points));
  } catch (const PreconditionViolated& e) {
    throw DocumentError(e.what());
  }
}

}  // namespace

std::string emit(const Json& doc) { return doc.dump(2) + "\n"; }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

Json point_json(const Point& p) { return Json(p.coords); }

void put_params(Json& doc, const ProtocolParams& params) {
  doc["size"] = {{"a", params.a}, {"b", params.b}, {"c", params.c}};
  doc["params"] = {{"q", params.q}, {"d", params.d}, {"k", params.k}};
}

ProtocolParams get_params(const Json& doc) {
  if (!doc.is_object() || !doc.contains("size") || !doc.contains("params"))
    throw DocumentError("document needs 'size' and 'params' objects");
  ProtocolParams p;
  const Json& size = doc.at("size");
  const Json& geo = doc.at("params");
  p.a = get_number<std::uint64_t>(size, "a");
  p.b = get_number<std::uint64_t>(size, "b");
  p.c = get_number<std::uint64_t>(size, "c");
  p.q = get_number<std::uint64_t>(geo, "q");
  p.d = get_number<unsigned>(geo, "d");
  p.k = get_number<unsigned>(geo, "k");
  try {
    p.validate();
  } catch (const BadParams& e) {
    throw DocumentError(e.what());
  }
  return p;
}

Hand get_hand(const Json& value, const char* what) {
  if (!value.is_array()) throw DocumentError(std::string(what) + " must be an array of cards");
  Hand h;
  for (const Json& c : value) {
    if (!is_non_negative(c) || c.get<std::uint64_t>() > std::numeric_limits<Card>::max())
      throw DocumentError(std::string(what) + " must contain positive integers");
    h.push_back(c.get<Card>());
  }
  std::sort(h.begin(), h.end());
  if (std::adjacent_find(h.begin(), h.end()) != h.end()) throw DocumentError(std::string(what) + " repeats a card");
  return h;
}

Json to_json(const DealDocument& doc) {
  Json out;
  put_params(out, doc.params);
  out["hands"] = {{"A", hand_json(doc.deal.alice)}, {"B", hand_json(doc.deal.bob)}, {"C", hand_json(doc.deal.cath)}};
  if (doc.seed) out["seed"] = *doc.seed;
  return out;
}

DealDocument parse_deal(const Json& doc) {
  DealDocument out;
  out.params = get_params(doc);
  if (!doc.contains("hands") || !doc.at("hands").is_object()) throw DocumentError("deal needs a 'hands' object");
  const Json& hands = doc.at("hands");
  for (const char* key : {"A", "B", "C"})
    if (!hands.contains(key)) throw DocumentError(std::string("deal is missing hand ") + key);
  out.deal.alice = get_hand(hands.at("A"), "hand A");
  out.deal.bob = get_hand(hands.at("B"), "hand B");
  out.deal.cath = get_hand(hands.at("C"), "hand C");
  out.seed = get_seed(doc);
  try {
    validate_deal(out.deal, out.params);
  } catch (const Error& e) {
    throw DocumentError(e.what());
  }
  return out;
}

Json to_json(const AnnouncementDocument& doc, const Space& space) {
  Json out;
  put_params(out, doc.params);
  out["announcement"] = Json::array();
  for (const Hand& h : doc.announcement.hands) out["announcement"].push_back(hand_json(h));
  if (doc.map) out["card_map"] = card_map_json(*doc.map, space);
  if (doc.seed) out["seed"] = *doc.seed;
  return out;
}

AnnouncementDocument parse_announcement(const Json& doc, const Space& space) {
  AnnouncementDocument out;
  out.params = get_params(doc);
  if (!doc.contains("announcement") || !doc.at("announcement").is_array())
    throw DocumentError("document needs an 'announcement' array");
  for (const Json& h : doc.at("announcement")) {
    Hand hand = get_hand(h, "announced hand");
    if (!hand.empty() && (hand.front() < 1 || hand.back() > out.params.deck()))
      throw DocumentError("announced hand has a card outside the deck");
    out.announcement.hands.push_back(std::move(hand));
  }
  std::sort(out.announcement.hands.begin(), out.announcement.hands.end());
  if (doc.contains("card_map")) out.map = parse_card_map(doc.at("card_map"), space);
  out.seed = get_seed(doc);
  return out;
}

Json transcript_json(const ProtocolParams& params, const Transcript& t, std::uint64_t seed, const Verification& flags,
                     const Space& space) {
  Json out = to_json(AnnouncementDocument{params, t.chosen.map, t.announcement, seed}, space);
  out["bob_resolution"] = hand_json(t.bob_resolution);
  out["bob_second_announcement"] = hand_json(t.bob_second_announcement);
  out["cath_candidate_count"] = t.cath_candidate_count;
  out["verification"] = {{"informative", flags.informative}, {"k_safe", flags.k_safe}, {"safety_k", flags.safety_k}};
  return out;
}

Json to_json(const SizeRecord& record) {
  Json out;
  put_params(out, record.params);
  out["cond1"] = record.cond1;
  out["cond2"] = record.cond2;
  out["theorem_applies"] = record.theorem_applies;
  return out;
}

Json to_json(const Violation& v, const CardMap* map, const Space* space) {
  Json out;
  out["kind"] = to_string(v.kind);
  out["cath_hand"] = hand_json(v.cath_hand);
  out["detail"] = v.detail;
  if (v.kind == ViolationKind::NotInformative) {
    out["pair"] = Json::array({hand_json(v.pair.at(0)), hand_json(v.pair.at(1))});
  } else {
    out["tuple"] = hand_json(v.tuple);
  }
  if (map && space) {
    auto points = [&](const Hand& h) {
      Json arr = Json::array();
      for (Card c : h) arr.push_back(point_json(space->point(map->point_of(c))));
      return arr;
    };
    out["cath_points"] = points(v.cath_hand);
    if (v.kind != ViolationKind::NotInformative) out["tuple_points"] = points(v.tuple);
  }
  return out;
}

Json to_json(const ProtocolReport& report, const Space* space) {
  Json out;
  put_params(out, report.params);
  out["safety_k"] = report.safety_k;
  out["hands"] = report.hands;
  out["min_pairwise_union"] = report.min_union;
  out["informative"] = report.informative();
  out["k_safe"] = report.k_safe();
  out["violations"] = Json::array();
  const CardMap identity = CardMap::identity(static_cast<std::uint32_t>(report.params.deck()));
  const CardMap* map = space ? &identity : nullptr;
  if (report.informative_violation) out["violations"].push_back(to_json(*report.informative_violation, map, space));
  if (report.safety_violation) out["violations"].push_back(to_json(*report.safety_violation, map, space));
  return out;
}

}  // namespace rcards::documents
