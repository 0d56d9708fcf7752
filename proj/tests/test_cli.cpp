#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = lhp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<lhp::json> lines(const std::string& text) {
  std::vector<lhp::json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(lhp::json::parse(line));
  return out;
}

const std::string kSamples = LHP_SAMPLES_DIR;

}  // namespace

TEST(Cli, EulerianChain) {
  const auto r = run({"eulerian", "--poset", "chain:1,2,3", "--s", "1,2,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = lhp::json::parse(r.out);
  EXPECT_EQ(doc["eulerian"], lhp::json::parse(R"(["1","4","1"])"));
  EXPECT_EQ(doc["agree"], true);
}

TEST(Cli, EulerianSingleton) {
  const auto r = run({"eulerian", "--poset", "antichain:1", "--s", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lhp::json::parse(r.out)["eulerian"], lhp::json::parse(R"(["1"])"));
}

TEST(Cli, EulerianText) {
  const auto r = run({"eulerian", "--poset", "antichain:2;s=2,2", "--format", "text"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 + 6t + t^2\nmethods agree\n");
}

TEST(Cli, VerifyKn1) {
  const auto r = run({"verify", "--identity", "KN1", "--k", "2", "--p", "2", "--tcap", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = lhp::json::parse(r.out);
  EXPECT_EQ(doc["id"], "KN1");
  EXPECT_EQ(doc["status"], "pass");
}

TEST(Cli, VerifyFromJsonFile) {
  const auto r = run({"verify", "--identity", "F", "--poset", kSamples + "/diamond.json", "--caps", "x=2"});
  ASSERT_EQ(r.code, 0) << r.err << r.out;
  EXPECT_EQ(lhp::json::parse(r.out)["status"], "pass");
}

TEST(Cli, VerifyAllListsEveryIdOnce) {
  const auto r = run({"verify-all", "--poset", "ordinal:1,2;s=1,2,2", "--caps", "x=2,t=3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto docs = lines(r.out);
  ASSERT_EQ(docs.size(), lhp::identity_ids().size() + 4);
  for (std::size_t i = 0; i < lhp::identity_ids().size(); ++i) EXPECT_EQ(docs[i]["id"], lhp::identity_ids()[i]);
}

TEST(Cli, SkipsExitZero) {
  const auto r = run({"verify", "--identity", "COR6", "--poset", "chain:1,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lhp::json::parse(r.out)["status"], "skip");
}

TEST(Cli, StatsTsv) {
  const auto r = run({"stats", "--poset", "chain:1,2;s=1,2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "pi\tr\tD1\tD2\tD3\tD4\tD\tdes_s\tcomaj\tlhp\n"
            "12\t0,0\t{}\t{0}\t{1}\t{0}\t{}\t0\t0\t0\n"
            "12\t0,1\t{}\t{0}\t{}\t{0,2}\t{2}\t1\t0\t1\n");
}

TEST(Cli, StatsJsonHasFmajForConstantS) {
  const auto docs = lines(run({"stats", "--poset", "antichain:2;s=2,2", "--format", "json"}).out);
  ASSERT_EQ(docs.size(), 8u);
  for (const auto& d : docs) EXPECT_EQ(d["fmaj"], d["lhp"]);
}

TEST(Cli, Ehrhart) {
  const auto r = run({"ehrhart", "--poset", "chain:2,1", "--nmax", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lhp::json::parse(r.out)["counts"], lhp::json::parse(R"(["0","1","3","6"])"));
}

TEST(Cli, Extensions) {
  EXPECT_EQ(run({"extensions", "--poset", "antichain:2"}).out, "[1,2]\n[2,1]\n");
  EXPECT_EQ(lines(run({"extensions", "--poset", "antichain:2;s=2,2", "--colored"}).out).size(), 8u);
}

TEST(Cli, Dual) {
  const auto r = run({"dual", "--poset", "chain:1,2;s=1,2"});
  EXPECT_EQ(r.out, "{\"p\":2,\"covers\":[[2,1]],\"s\":[2,1]}\n");
}

TEST(Cli, Bij) {
  const auto r = run({"bij", "--poset", "chain:1,2", "--n", "1", "--points"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto docs = lines(r.out);
  EXPECT_EQ(docs.back()["status"], "pass");
  EXPECT_EQ(docs.size(), docs.back()["details"]["domain_size"].get<std::size_t>() + 1);
}

TEST(Cli, OrdinalInterlacing) {
  const auto r = run({"ordinal-interlacing", "--blocks", "1", "--s", "3"});
  ASSERT_EQ(r.code, 0);
  const auto doc = lhp::json::parse(r.out);
  EXPECT_EQ(doc["status"], "pass");
  EXPECT_EQ(doc["details"]["family"].size(), 3u);
}

TEST(Cli, ScanGammaSummary) {
  const auto r = run({"scan-gamma", "--pmax", "3"});
  ASSERT_EQ(r.code, 0);
  const auto docs = lines(r.out);
  EXPECT_EQ(docs.back()["summary"]["posets_examined"], 23);
  EXPECT_EQ(docs.back()["summary"]["gamma_negative_binary_rank"], 0);
}

TEST(Cli, Union) {
  const auto r = run({"union", "--left", "chain:1,2;s=1,2", "--right", "antichain:1", "--nmax", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lhp::json::parse(r.out)["status"], "pass");
}

TEST(Cli, KnRoots) {
  const auto r = run({"kn-roots", "--k", "2", "--p", "2", "--samples", "5", "--seed", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lhp::json::parse(r.out)["details"]["checked"], 5);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"verify-all", "--poset", "chain:2,1,3;s=1,2,1", "--caps", "x=2,t=3"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, ErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"eulerian"}).code, 2);
  EXPECT_EQ(run({"eulerian", "--poset", "chain:1,1"}).code, 2);
  EXPECT_EQ(run({"eulerian", "--poset", "antichain:2", "--s", "1"}).code, 2);
  EXPECT_EQ(run({"eulerian", "--poset", "blob:2"}).code, 2);
  EXPECT_EQ(run({"verify", "--identity", "NOPE", "--poset", "antichain:1"}).code, 2);
  EXPECT_EQ(run({"verify", "--identity", "F", "--poset", "antichain:1", "--caps", "x=0"}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
}

TEST(Cli, ResourceLimitExitsThree) {
  EXPECT_EQ(run({"extensions", "--poset", "antichain:11"}).code, 3);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("scan-gamma"), std::string::npos);
}
