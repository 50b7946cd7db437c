#include "rcards/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <optional>
#include <sstream>

#include "rcards/documents.hpp"
#include "rcards/errors.hpp"
#include "rcards/params.hpp"
#include "rcards/protocol.hpp"
#include "rcards/verifier.hpp"

namespace rcards {

namespace {

using documents::Json;

struct GeometryArgs {
  std::uint64_t q = 0;
  unsigned d = 0;
  unsigned k = 0;
  std::uint64_t c = 0;
  std::optional<std::uint64_t> a;
  std::optional<std::uint64_t> b;

  void add_to(CLI::App* app, bool required = true) {
    app->add_option("--q", q, "field order (prime power)")->required(required);
    app->add_option("--d", d, "hyperplane dimension; cards live in F_q^(d+1)")->required(required);
    app->add_option("--k", k, "number of parallel hyperplanes in Alice's hand")->required(required);
    app->add_option("--c", c, "Cath's card count")->required(required);
    app->add_option("--a", a, "Alice's card count (checked against k q^d)");
    app->add_option("--b", b, "Bob's card count (checked against the deck)");
  }

  ProtocolParams params() const {
    ProtocolParams p = ProtocolParams::from_geometry(q, d, k, c);
    if ((a && *a != p.a) || (b && *b != p.b))
      throw BadParams("given size does not match the geometry: expected " + p.to_string());
    return p;
  }
};

std::vector<Card> parse_card_list(const std::string& text) {
  std::vector<Card> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<Card>(v));
    } catch (const std::exception&) {
      throw DocumentError("not a card list: " + text);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string join(const Hand& h) {
  std::string s;
  for (std::size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + std::to_string(h[i]);
  return s;
}

void print_records_table(std::ostream& out, const std::vector<SizeRecord>& records) {
  out << std::setw(6) << "a" << std::setw(6) << "b" << std::setw(6) << "c" << std::setw(6) << "q" << std::setw(4)
      << "d" << std::setw(4) << "k" << std::setw(7) << "cond1" << std::setw(7) << "cond2" << std::setw(9) << "theorem"
      << "\n";
  for (const SizeRecord& r : records) {
    const auto& p = r.params;
    out << std::setw(6) << p.a << std::setw(6) << p.b << std::setw(6) << p.c << std::setw(6) << p.q << std::setw(4)
        << p.d << std::setw(4) << p.k << std::setw(7) << (r.cond1 ? "yes" : "no") << std::setw(7)
        << (r.cond2 ? "yes" : "no") << std::setw(9) << (r.theorem_applies ? "yes" : "no") << "\n";
  }
}

void print_report_table(std::ostream& out, const Json& report) {
  out << report["size"].dump() << " " << report["params"].dump() << "\n";
  for (const char* key : {"hands", "min_pairwise_union", "safety_k", "informative", "k_safe", "flags_match"})
    if (report.contains(key)) out << "  " << key << ": " << report[key].dump() << "\n";
  for (const Json& v : report["violations"]) out << "  violation " << v["kind"].get<std::string>() << ": "
                                                 << v["detail"].get<std::string>() << "\n";
}

class Tool {
 public:
  Tool(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  void emit(const Json& doc) { out_ << documents::emit(doc); }
  void emit_report(const Json& report) {
    if (format_ == "table")
      print_report_table(out_, report);
    else
      emit(report);
  }
  Budget budget() const {
    Budget b;
    if (max_hands_) b.max_hands = *max_hands_;
    return b;
  }

  int params_derive();
  int params_list();
  int params_check();
  int deal();
  int announce();
  int resolve();
  int verify_announcement();
  int verify_protocol();
  int demo();

  std::ostream& out_;
  std::ostream& err_;

  std::string format_ = "json";
  std::optional<std::uint64_t> max_hands_;
  GeometryArgs geometry_;
  unsigned derive_k_ = 0, derive_d_ = 0;
  std::uint64_t derive_c_ = 0;
  std::uint64_t max_deck_ = 0;
  bool applicable_only_ = false;
  std::optional<std::uint64_t> seed_;
  std::string deal_path_, announcement_path_, file_path_, bob_cards_;
  std::optional<unsigned> safety_k_;
};

int Tool::params_derive() {
  const SizeRecord r = derive_params(derive_k_, derive_c_, derive_d_);
  if (format_ == "table")
    print_records_table(out_, {r});
  else
    emit(documents::to_json(r));
  return kExitOk;
}

int Tool::params_list() {
  std::vector<SizeRecord> records = enumerate_sizes(max_deck_);
  if (applicable_only_)
    std::erase_if(records, [](const SizeRecord& r) { return !r.theorem_applies; });
  if (format_ == "table") {
    print_records_table(out_, records);
  } else {
    Json arr = Json::array();
    for (const SizeRecord& r : records) arr.push_back(documents::to_json(r));
    emit(arr);
  }
  return kExitOk;
}

int Tool::params_check() {
  const SizeRecord r = check_conditions(geometry_.params());
  if (format_ == "table")
    print_records_table(out_, {r});
  else
    emit(documents::to_json(r));
  return kExitOk;
}

int Tool::deal() {
  const ProtocolParams params = geometry_.params();
  emit(documents::to_json(documents::DealDocument{params, random_deal(params, *seed_), seed_}));
  return kExitOk;
}

int Tool::announce() {
  const documents::DealDocument d = documents::parse_deal(documents::read_file(deal_path_));
  const GeometricProtocol protocol(d.params, budget());
  const ImplicitAnnouncement chosen = protocol.choose_announcement(d.deal.alice, *seed_);
  emit(documents::to_json(documents::AnnouncementDocument{d.params, chosen.map, protocol.enumerate(chosen), seed_},
                          protocol.space()));
  return kExitOk;
}

int Tool::resolve() {
  const Json doc = documents::read_file(announcement_path_);
  const ProtocolParams params = documents::get_params(doc);
  const GeometricProtocol protocol(params, budget());
  const auto ann = documents::parse_announcement(doc, protocol.space());
  Hand bob;
  if (deal_path_.empty() && bob_cards_.empty()) throw BadParams("resolve needs --bob or --deal");
  if (!deal_path_.empty())
    bob = documents::parse_deal(documents::read_file(deal_path_)).deal.bob;
  else
    bob = parse_card_list(bob_cards_);
  if (bob.size() != params.b) throw BadHandSize("Bob must hold " + std::to_string(params.b) + " cards");
  try {
    emit(Json{{"alice_hand", bob_resolve(ann.announcement, bob)}, {"bob_hand", bob}});
  } catch (const Ambiguous& e) {
    emit(Json{{"bob_hand", bob}, {"candidates", e.count()}, {"error", e.what()}});
    return kExitViolation;
  }
  return kExitOk;
}

int Tool::verify_announcement() {
  const Json doc = documents::read_file(file_path_);
  const ProtocolParams params = documents::get_params(doc);
  const GeometricProtocol protocol(params, budget());
  const auto ann = documents::parse_announcement(doc, protocol.space());

  unsigned k = params.k;
  std::optional<documents::Verification> embedded;
  if (doc.contains("verification")) {
    const Json& v = doc.at("verification");
    embedded = documents::Verification{v.at("informative").get<bool>(), v.at("k_safe").get<bool>(),
                                       v.at("safety_k").get<unsigned>()};
    k = embedded->safety_k;
  }
  if (safety_k_) k = *safety_k_;

  ProtocolReport report;
  report.params = params;
  report.safety_k = k;
  report.hands = ann.announcement.hands.size();
  report.min_union = min_pairwise_union(ann.announcement);
  report.informative_violation = check_informative(ann.announcement, params, budget());
  report.safety_violation = check_k_safe(ann.announcement, params, k, budget());

  Json out = documents::to_json(report, nullptr);
  if (ann.map) {
    out["violations"] = Json::array();
    for (const auto* v : {&report.informative_violation, &report.safety_violation})
      if (*v) out["violations"].push_back(documents::to_json(**v, &*ann.map, &protocol.space()));
  }
  bool flags_match = true;
  if (embedded && embedded->safety_k == k) {
    flags_match = embedded->informative == report.informative() && embedded->k_safe == report.k_safe();
    out["flags_match"] = flags_match;
  }
  emit_report(out);
  return report.informative() && report.k_safe() && flags_match ? kExitOk : kExitViolation;
}

int Tool::verify_protocol() {
  const ProtocolParams params = geometry_.params();
  const unsigned k = safety_k_.value_or(params.k);
  const ProtocolReport report = check_protocol(params, k, budget());
  const GeometricProtocol protocol(params, budget());
  emit_report(documents::to_json(report, &protocol.space()));
  return report.informative() && report.k_safe() ? kExitOk : kExitViolation;
}

int Tool::demo() {
  ProtocolParams params;
  Deal deal;
  if (!deal_path_.empty()) {
    const auto d = documents::parse_deal(documents::read_file(deal_path_));
    params = d.params;
    deal = d.deal;
  } else {
    params = geometry_.params();
    deal = random_deal(params, *seed_);
  }
  const GeometricProtocol protocol(params, budget());
  const Transcript t = protocol.run_exchange(deal, *seed_);
  documents::Verification flags;
  flags.safety_k = safety_k_.value_or(params.k);
  flags.informative = !check_informative(t.announcement, params, budget());
  flags.k_safe = !check_k_safe(t.announcement, params, flags.safety_k, budget());
  Json doc = documents::transcript_json(params, t, *seed_, flags, protocol.space());
  if (format_ == "table") {
    out_ << "deal: A={" << join(deal.alice) << "} B={" << join(deal.bob) << "} C={" << join(deal.cath) << "}\n"
         << "announced hands: " << t.announcement.hands.size() << "\n"
         << "bob resolves: {" << join(t.bob_resolution) << "}\n"
         << "bob announces: {" << join(t.bob_second_announcement) << "}\n"
         << "cath candidates: " << t.cath_candidate_count << "\n"
         << "informative: " << (flags.informative ? "yes" : "no") << "\n"
         << flags.safety_k << "-safe: " << (flags.k_safe ? "yes" : "no") << "\n";
  } else {
    emit(doc);
  }
  return flags.informative && flags.k_safe ? kExitOk : kExitViolation;
}

int Tool::run(const std::vector<std::string>& args) {
  CLI::App app{"Geometric protocol for the generalized Russian cards problem", "rcards"};
  app.require_subcommand(1);
  app.add_option("--format", format_, "report format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--max-hands", max_hands_, "override the announcement size budget");

  auto* params = app.add_subcommand("params", "parameter search and condition checks");
  params->require_subcommand(1);
  auto* derive = params->add_subcommand("derive", "derive a size satisfying both conditions");
  derive->add_option("--k", derive_k_)->required();
  derive->add_option("--c", derive_c_)->required();
  derive->add_option("--d", derive_d_)->required();
  auto* list = params->add_subcommand("list", "tabulate every size up to a deck bound");
  list->add_option("--max-deck", max_deck_)->required();
  list->add_flag("--applicable-only", applicable_only_, "only sizes covered by the main theorem");
  auto* check = params->add_subcommand("check", "evaluate both conditions for one size");
  geometry_.add_to(check);

  auto* deal = app.add_subcommand("deal", "deal cards at random");
  geometry_.add_to(deal);
  deal->add_option("--seed", seed_)->required();

  auto* announce = app.add_subcommand("announce", "Alice's announcement for a deal file");
  announce->add_option("--deal", deal_path_)->required();
  announce->add_option("--seed", seed_)->required();

  auto* resolve = app.add_subcommand("resolve", "Bob's resolution of an announcement");
  resolve->add_option("--announcement", announcement_path_)->required();
  auto* bob_opt = resolve->add_option("--bob", bob_cards_, "Bob's cards, comma separated");
  auto* deal_opt = resolve->add_option("--deal", deal_path_, "take Bob's hand from a deal file");
  bob_opt->excludes(deal_opt);

  auto* verify = app.add_subcommand("verify", "exhaustive informativity and k-safety checks");
  verify->require_subcommand(1);
  auto* verify_ann = verify->add_subcommand("announcement", "verify an announcement or transcript file");
  verify_ann->add_option("--file", file_path_)->required();
  verify_ann->add_option("--k-safety", safety_k_);
  auto* verify_proto = verify->add_subcommand("protocol", "verify the protocol for one size");
  geometry_.add_to(verify_proto);
  verify_proto->add_option("--k-safety", safety_k_, "tuple size to check (defaults to k)");

  auto* demo = app.add_subcommand("demo", "deal, announce, resolve and verify");
  geometry_.add_to(demo, false);
  demo->add_option("--deal", deal_path_);
  demo->add_option("--seed", seed_)->required();
  demo->add_option("--k-safety", safety_k_);

  std::vector<const char*> argv{"rcards"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out_, err_);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (demo->parsed() && deal_path_.empty() && (geometry_.q == 0 || geometry_.d == 0 || geometry_.k == 0))
      throw BadParams("demo needs either --deal or --q, --d, --k and --c");
    if (derive->parsed()) return params_derive();
    if (list->parsed()) return params_list();
    if (check->parsed()) return params_check();
    if (deal->parsed()) return this->deal();
    if (announce->parsed()) return this->announce();
    if (resolve->parsed()) return this->resolve();
    if (verify_ann->parsed()) return verify_announcement();
    if (verify_proto->parsed()) return verify_protocol();
    if (demo->parsed()) return this->demo();
  } catch (const SizeGuard& e) {
    err_ << "size guard: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const Ambiguous& e) {
    err_ << "protocol failure: " << e.what() << "\n";
    return kExitViolation;
  } catch (const Error& e) {
    err_ << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    err_ << "error: malformed document: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Tool(out, err).run(args);
}

}  // namespace rcards
