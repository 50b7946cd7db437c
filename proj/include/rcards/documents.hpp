#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "rcards/protocol.hpp"
#include "rcards/verifier.hpp"

// JSON documents exchanged by the command-line tool. Objects are emitted with
// sorted keys and sorted card lists so that fixtures diff cleanly; parsing
// throws DocumentError on anything malformed.
namespace rcards::documents {

using Json = nlohmann::json;

// Two-space indentation plus a trailing newline.
std::string emit(const Json& doc);
Json parse(const std::string& text);
Json read_file(const std::string& path);

// {"size": {"a","b","c"}, "params": {"q","d","k"}} merged into doc.
void put_params(Json& doc, const ProtocolParams& params);
ProtocolParams get_params(const Json& doc);

Hand get_hand(const Json& value, const char* what);

struct DealDocument {
  ProtocolParams params;
  Deal deal;
  std::optional<std::uint64_t> seed;
};

Json to_json(const DealDocument& doc);
DealDocument parse_deal(const Json& doc);

struct AnnouncementDocument {
  ProtocolParams params;
  std::optional<CardMap> map;  // absent for hand-written announcements
  EnumeratedAnnouncement announcement;
  std::optional<std::uint64_t> seed;
};

Json to_json(const AnnouncementDocument& doc, const Space& space);
AnnouncementDocument parse_announcement(const Json& doc, const Space& space);

struct Verification {
  bool informative = false;
  bool k_safe = false;
  unsigned safety_k = 0;
};

Json transcript_json(const ProtocolParams& params, const Transcript& t, std::uint64_t seed,
                     const Verification& flags, const Space& space);

Json to_json(const SizeRecord& record);

// Points of the canonical map are rendered next to the card numbers when a space is given.
Json to_json(const Violation& v, const CardMap* map, const Space* space);
Json to_json(const ProtocolReport& report, const Space* space);

Json point_json(const Point& p);

}  // namespace rcards::documents
