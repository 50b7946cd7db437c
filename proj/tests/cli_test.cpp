#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rcards/cli.hpp"
#include "rcards/documents.hpp"

namespace rcards {
namespace {

using documents::Json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("rcards-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  std::filesystem::path path_;
};

TEST(Cli, DerivesTheSevenByTwoSize) {
  const Result r = run({"params", "derive", "--k", "2", "--c", "2", "--d", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["size"], (Json{{"a", 14}, {"b", 33}, {"c", 2}}));
  EXPECT_EQ(j["params"]["q"], 7);
  EXPECT_EQ(j["theorem_applies"], true);
}

TEST(Cli, ListsSizes) {
  const Result all = run({"params", "list", "--max-deck", "16"});
  ASSERT_EQ(all.code, kExitOk);
  const Result applicable = run({"params", "list", "--max-deck", "16", "--applicable-only"});
  ASSERT_EQ(applicable.code, kExitOk);
  const Json a = Json::parse(all.out), b = Json::parse(applicable.out);
  EXPECT_LT(b.size(), a.size());
  for (const Json& r : b) EXPECT_TRUE(r["theorem_applies"].get<bool>());
  const Result table = run({"--format", "table", "params", "list", "--max-deck", "9"});
  EXPECT_EQ(table.code, kExitOk);
  EXPECT_NE(table.out.find("theorem"), std::string::npos);
}

TEST(Cli, ChecksConditions) {
  const Result r = run({"params", "check", "--q", "5", "--d", "1", "--k", "2", "--c", "3"});
  ASSERT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["cond1"], true);
  EXPECT_EQ(j["cond2"], false);
}

TEST(Cli, DemoResolvesAlicesHand) {
  const Result r = run({"demo", "--a", "8", "--b", "6", "--c", "2", "--q", "4", "--d", "1", "--k", "2", "--seed", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["bob_resolution"].size(), 8u);
  EXPECT_GE(j["cath_candidate_count"].get<int>(), 2);
  EXPECT_EQ(j["verification"]["informative"], true);
  EXPECT_EQ(j["verification"]["k_safe"], true);
  EXPECT_EQ(run({"demo", "--a", "8", "--b", "6", "--c", "2", "--q", "4", "--d", "1", "--k", "2", "--seed", "7"}).out,
            r.out);
}

TEST(Cli, VerifyProtocolReportsTheThreeCardWitness) {
  const Result r = run({"verify", "protocol", "--q", "4", "--d", "1", "--k", "2", "--c", "3", "--k-safety", "1"});
  EXPECT_EQ(r.code, kExitViolation);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["k_safe"], false);
  ASSERT_EQ(j["violations"].size(), 1u);
  EXPECT_EQ(j["violations"][0]["kind"], "NoContainingHand");
  EXPECT_EQ(j["violations"][0]["cath_points"].size(), 3u);
}

TEST(Cli, VerifyProtocolPassesTheFixture) {
  EXPECT_EQ(run({"verify", "protocol", "--q", "4", "--d", "1", "--k", "2", "--c", "2"}).code, kExitOk);
  const Result table = run({"--format", "table", "verify", "protocol", "--q", "4", "--d", "1", "--k", "2", "--c", "2"});
  EXPECT_EQ(table.code, kExitOk);
  EXPECT_NE(table.out.find("k_safe: true"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"params", "derive", "--k", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"params", "check", "--q", "6", "--d", "1", "--k", "2", "--c", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"params", "check", "--q", "4", "--d", "1", "--k", "2", "--c", "2", "--a", "9"}).code, kExitUsage);
  EXPECT_EQ(run({"demo", "--seed", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "announcement", "--file", "/nonexistent/x.json"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, SizeGuardExitCode) {
  EXPECT_EQ(run({"verify", "protocol", "--q", "2", "--d", "16", "--k", "1", "--c", "1"}).code, kExitSizeGuard);
  EXPECT_EQ(run({"--max-hands", "10", "demo", "--q", "4", "--d", "1", "--k", "2", "--c", "2", "--seed", "1"}).code,
            kExitSizeGuard);
}

TEST(Cli, DealAnnounceResolvePipeline) {
  TempDir dir;
  const Result dealt = run({"deal", "--q", "4", "--d", "1", "--k", "2", "--c", "2", "--seed", "5"});
  ASSERT_EQ(dealt.code, kExitOk) << dealt.err;
  const std::string deal_path = dir.write("deal.json", dealt.out);

  const Result announced = run({"announce", "--deal", deal_path, "--seed", "11"});
  ASSERT_EQ(announced.code, kExitOk) << announced.err;
  const std::string ann_path = dir.write("announcement.json", announced.out);
  EXPECT_EQ(Json::parse(announced.out)["announcement"].size(), 30u);

  const Result resolved = run({"resolve", "--announcement", ann_path, "--deal", deal_path});
  ASSERT_EQ(resolved.code, kExitOk) << resolved.err;
  EXPECT_EQ(Json::parse(resolved.out)["alice_hand"], Json::parse(dealt.out)["hands"]["A"]);

  const Result verified = run({"verify", "announcement", "--file", ann_path});
  EXPECT_EQ(verified.code, kExitOk) << verified.out;

  EXPECT_EQ(run({"resolve", "--announcement", ann_path}).code, kExitUsage);
  EXPECT_EQ(run({"resolve", "--announcement", ann_path, "--bob", "1,2"}).code, kExitUsage);
}

TEST(Cli, TranscriptReverifiesItsFlags) {
  TempDir dir;
  for (const std::vector<std::string>& geometry :
       {std::vector<std::string>{"--q", "4", "--d", "1", "--k", "2", "--c", "2"},
        std::vector<std::string>{"--q", "3", "--d", "1", "--k", "1", "--c", "1"}}) {
    std::vector<std::string> args = {"demo", "--seed", "3"};
    args.insert(args.end(), geometry.begin(), geometry.end());
    const Result demo = run(args);
    ASSERT_EQ(demo.code, kExitOk) << demo.err;
    const std::string path = dir.write("transcript.json", demo.out);
    const Result verified = run({"verify", "announcement", "--file", path});
    EXPECT_EQ(verified.code, kExitOk);
    EXPECT_EQ(Json::parse(verified.out)["flags_match"], true);
  }
}

TEST(Cli, TamperedFlagsAreDetected) {
  TempDir dir;
  const Result demo = run({"demo", "--q", "4", "--d", "1", "--k", "2", "--c", "2", "--seed", "3"});
  ASSERT_EQ(demo.code, kExitOk);
  Json doc = Json::parse(demo.out);
  doc["verification"]["k_safe"] = false;
  const std::string path = dir.write("tampered.json", documents::emit(doc));
  const Result verified = run({"verify", "announcement", "--file", path});
  EXPECT_EQ(verified.code, kExitViolation);
  EXPECT_EQ(Json::parse(verified.out)["flags_match"], false);
}

TEST(Cli, AmbiguousResolutionExitsWithViolation) {
  // Over GF(2)^2 every pair is announced, so Bob's single card leaves three hands.
  const Result r = run({"demo", "--q", "2", "--d", "1", "--k", "1", "--c", "1", "--seed", "1"});
  EXPECT_EQ(r.code, kExitViolation);
  EXPECT_NE(r.err.find("3 hands"), std::string::npos);
}

}  // namespace
}  // namespace rcards
