#include "ccloops/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ccl {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

const fs::path kSource = CCLOOPS_SOURCE_DIR;

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult RunCorpus(const std::string& command, const std::string& corpus_file, bool json = true) {
  RunConfig c;
  c.command = command;
  c.input_name = "corpus/" + corpus_file;
  c.json = json;
  return run(c, Slurp(kSource / "corpus" / corpus_file));
}

Json RunJson(const std::string& command, const std::string& corpus_file) {
  return Json::parse(RunCorpus(command, corpus_file).output);
}

TEST(CliTest, LoopOnA2) {
  const RunResult r = RunCorpus("loop", "a2.cox");
  EXPECT_EQ(r.exit_code, kExitOk);
  const Json j = Json::parse(r.output);
  EXPECT_EQ(j["group_order"], 6);
  EXPECT_EQ(j["loop_order"], 12);
  EXPECT_EQ(j["associative"], false);
  int moufang = 0, chein = 0;
  for (const Json& c : j["checks"]) {
    const std::string name = c["name"];
    if (name.rfind("moufang_", 0) == 0 && c["pass"]) ++moufang;
    if ((name == "chein_left" || name == "chein_right" || name == "chein_coset_product") && c["pass"])
      ++chein;
  }
  EXPECT_EQ(moufang, 3);
  EXPECT_GE(chein, 3);
}

TEST(CliTest, CohomologyOnTriangle) {
  const Json j = RunJson("cohomology", "triangle.graph");
  EXPECT_EQ(j["dims"]["Z1"], 3);
  EXPECT_EQ(j["dims"]["B1"], 2);
  EXPECT_EQ(j["dims"]["H1"], 1);
  EXPECT_EQ(j["non_tree_edges"].size(), 1u);
  EXPECT_EQ(j["status"], "pass");
}

TEST(CliTest, AmalgamsOnTriangle) {
  const Json j = RunJson("amalgams", "triangle.cox");
  EXPECT_EQ(j["class_count"], 2);
  ASSERT_EQ(j["classes"].size(), 2u);
  EXPECT_EQ(j["classes"][0]["delta"], Json::array());
  EXPECT_EQ(j["classes"][1]["delta"], Json::array({1}));
  EXPECT_EQ(j["status"], "pass");
}

TEST(CliTest, AutOnQ8) {
  const Json j = RunJson("aut", "q8.table");
  EXPECT_EQ(j["case"], "case2");
  EXPECT_EQ(j["theorem"]["brute_force_order"], 192);
  EXPECT_EQ(j["status"], "pass");
}

TEST(CliTest, AutOnS3) {
  const Json j = RunJson("aut", "s3.table");
  EXPECT_EQ(j["case"], "case3");
  EXPECT_EQ(j["aut_order"], 108);
  EXPECT_EQ(j["status"], "pass");
}

TEST(CliTest, AutOnKleinFour) {
  const Json j = RunJson("aut", "z2xz2.table");
  EXPECT_EQ(j["case"], "case1");
  EXPECT_EQ(j["aut_order"], 168);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(RunCorpus("verify", "failing/nonmoufang5.table").exit_code, kExitCheckFailed);
  EXPECT_EQ(RunCorpus("parse", "failing/duplicate_edge.cox").exit_code, kExitParseError);
  RunConfig c;
  c.command = "group";
  c.cap = 5;
  EXPECT_EQ(run(c, Slurp(kSource / "corpus/a3.cox")).exit_code, kExitResourceLimit);
  c.command = "frobnicate";
  EXPECT_EQ(run(c, "coxeter v1\nrank 1").exit_code, kExitUsage);
  c.command = "loop";
  EXPECT_EQ(run(c, "graph v1\nedge 1 2").exit_code, kExitCheckFailed);
  c.command = "cohomology";
  c.strict = true;
  EXPECT_EQ(run(c, "graph v1\nvertices 3\nedge 1 2").exit_code, kExitCheckFailed);
}

TEST(CliTest, BudgetExhaustionIsResourceLimit) {
  RunConfig c;
  c.command = "aut";
  c.budget = 10;
  EXPECT_EQ(run(c, Slurp(kSource / "corpus/q8.table")).exit_code, kExitResourceLimit);
}

// Every failing check carries a witness.
void ExpectWitnesses(const Json& node) {
  if (node.is_object()) {
    if (node.contains("pass") && node.contains("name") && node["pass"] == false)
      EXPECT_TRUE(node.contains("witness")) << node.dump();
    for (const auto& [k, v] : node.items()) ExpectWitnesses(v);
  } else if (node.is_array()) {
    for (const Json& v : node) ExpectWitnesses(v);
  }
}

TEST(CliTest, FailuresCarryWitnesses) {
  ExpectWitnesses(RunJson("verify", "failing/nonmoufang5.table"));
}

TEST(CliTest, Sha256KnownValues) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

std::vector<std::string> CorpusFiles() {
  std::vector<std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(kSource / "corpus"))
    if (e.is_regular_file()) files.push_back(fs::relative(e.path(), kSource / "corpus").generic_string());
  std::sort(files.begin(), files.end());
  return files;
}

// Golden reports live in tests/golden. Set CCLOOPS_UPDATE_GOLDEN=1 to
// rewrite them.
TEST(GoldenTest, VerifyReportsMatch) {
  const bool update = std::getenv("CCLOOPS_UPDATE_GOLDEN") != nullptr;
  const fs::path dir = kSource / "tests" / "golden";
  const std::vector<std::string> files = CorpusFiles();
  ASSERT_FALSE(files.empty());
  for (const std::string& f : files) {
    for (bool json : {true, false}) {
      std::string name = f;
      std::replace(name.begin(), name.end(), '/', '_');
      const fs::path golden = dir / (name + (json ? ".verify.json" : ".verify.txt"));
      const std::string got = RunCorpus("verify", f, json).output;
      if (update) {
        fs::create_directories(dir);
        std::ofstream(golden, std::ios::binary) << got;
        continue;
      }
      ASSERT_TRUE(fs::exists(golden)) << golden;
      EXPECT_EQ(got, Slurp(golden)) << f;
    }
  }
}

TEST(GoldenTest, RepeatedRunsAreIdentical) {
  for (const std::string& f : CorpusFiles()) EXPECT_EQ(RunCorpus("verify", f).output, RunCorpus("verify", f).output) << f;
}

}  // namespace
}  // namespace ccl
