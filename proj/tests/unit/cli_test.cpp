// Copyright 2026 The mibs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli/commands.hpp"
#include "mibs/error.hpp"

namespace mibs::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mibs_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string &name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  static void write(const std::string &p, const std::string &text) {
    std::ofstream(p, std::ios::binary) << text;
  }

  fs::path dir_;
};

TEST_F(CliTest, ChainAffineThenVerify) {
  auto cert = path("affine.json");
  auto r = run_cli({"chain", "--family", "affine", "--p", "3", "--d", "2", "--out", cert});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(json::parse(slurp(cert))["claimed_length"], 5);
  auto v = run_cli({"verify", cert});
  EXPECT_EQ(v.code, kOk) << v.out;
  EXPECT_TRUE(json::parse(v.out)["passed"].get<bool>());
}

TEST_F(CliTest, ChainWreath) {
  auto cert = path("wreath.json");
  ASSERT_EQ(run_cli({"chain", "--family", "wreath", "--m", "5", "--k", "2", "--out", cert}).code, kOk);
  auto doc = json::parse(slurp(cert));
  EXPECT_EQ(doc["claimed_length"], 6);
  EXPECT_EQ(doc["subgroup"]["family"], "wreath");
  EXPECT_EQ(run_cli({"verify", cert, "--format", "text"}).code, kOk);
}

TEST_F(CliTest, ChainRejectsEvenPrime) {
  auto r = run_cli({"chain", "--family", "affine", "--p", "2", "--d", "3"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("odd p required"), std::string::npos);
}

TEST_F(CliTest, ChainRejectsMissingParameter) {
  EXPECT_EQ(run_cli({"chain", "--family", "wreath", "--m", "5"}).code, kUsageError);
  EXPECT_EQ(run_cli({"chain", "--family", "cubic"}).code, kUsageError);
}

TEST_F(CliTest, ChainIsByteStable) {
  auto a = run_cli({"chain", "--family", "affine", "--p", "5", "--d", "2"});
  auto b = run_cli({"chain", "--family", "affine", "--p", "5", "--d", "2"});
  ASSERT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, OracleNatural) {
  auto r = run_cli({"oracle", "--ambient", "S", "--subgroup", "natural", "--n", "6"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["mibs"], 5);
}

TEST_F(CliTest, OracleAffineLineWritesWitness) {
  auto cert = path("witness.json");
  auto r = run_cli({"oracle", "--ambient", "S", "--subgroup", "agl", "--p", "7", "--d", "1",
                    "--out", cert});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["mibs"], 4);
  EXPECT_EQ(doc["degree"], 120);
  EXPECT_EQ(json::parse(slurp(cert))["claimed_length"], 4);
  EXPECT_EQ(run_cli({"verify", cert}).code, kOk);

  auto again = run_cli({"oracle", "--ambient", "S", "--subgroup", "agl", "--p", "7", "--d", "1"});
  EXPECT_EQ(again.out, r.out);
  auto no_prune = run_cli({"oracle", "--subgroup", "agl", "--p", "7", "--d", "1", "--no-prune"});
  EXPECT_EQ(json::parse(no_prune.out)["mibs"], 4);
  auto threaded = run_cli({"oracle", "--subgroup", "agl", "--p", "7", "--d", "1", "--threads", "3"});
  EXPECT_EQ(json::parse(threaded.out)["base"], doc["base"]);
}

TEST_F(CliTest, OracleAlternating) {
  auto r = run_cli({"oracle", "--ambient", "A", "--subgroup", "agl", "--p", "7", "--d", "1",
                    "--format", "text"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out.rfind("mibs 3\n", 0), 0u);
}

TEST_F(CliTest, OracleRefusesLargeIndex) {
  auto r = run_cli({"oracle", "--ambient", "S", "--subgroup", "wreath", "--m", "5", "--k", "2"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("index"), std::string::npos);
  auto memo = run_cli({"oracle", "--subgroup", "agl", "--p", "7", "--d", "1", "--limit-memo", "1"});
  EXPECT_EQ(memo.code, kUsageError);
  EXPECT_NE(memo.err.find("memo"), std::string::npos);
}

TEST_F(CliTest, OracleExplicitGenerators) {
  auto gens = path("gens.txt");
  write(gens, "# a 3-cycle in S4\n4\n(1 2 3)\n");
  auto r = run_cli({"oracle", "--subgroup", "explicit", "--generators", gens, "--ambient", "S"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["degree"], 8);
  EXPECT_EQ(doc["subgroup"]["order"], "3");
  EXPECT_EQ(run_cli({"oracle", "--subgroup", "explicit"}).code, kUsageError);
}

TEST_F(CliTest, LimitsMustBePositive) {
  EXPECT_EQ(run_cli({"oracle", "--n", "5", "--threads", "0"}).code, kUsageError);
  EXPECT_EQ(run_cli({"oracle", "--n", "5", "--limit-t", "0"}).code, kUsageError);
  EXPECT_EQ(run_cli({"verify", "x.json", "--limit-enum", "-3"}).code, kUsageError);
}

TEST_F(CliTest, VerifyTamperedOrder) {
  auto cert = path("affine.json");
  ASSERT_EQ(run_cli({"chain", "--family", "affine", "--p", "3", "--d", "2", "--out", cert}).code, kOk);
  auto doc = json::parse(slurp(cert));
  doc["levels"][2]["order"] = "5";
  auto bad = path("tampered.json");
  write(bad, doc.dump(2));
  auto r = run_cli({"verify", bad, "--format", "text"});
  EXPECT_EQ(r.code, kVerificationFailed);
  EXPECT_NE(r.out.find("first failing level 2"), std::string::npos) << r.out;
  auto j = run_cli({"verify", bad});
  EXPECT_EQ(json::parse(j.out)["first_failure"], 2);
}

TEST_F(CliTest, VerifyWrongFamilyGenerators) {
  auto cert = path("affine.json");
  ASSERT_EQ(run_cli({"chain", "--family", "affine", "--p", "3", "--d", "2", "--out", cert}).code, kOk);
  auto doc = json::parse(slurp(cert));
  doc["subgroup"]["params"]["p"] = 5;
  auto bad = path("mislabelled.json");
  write(bad, doc.dump(2));
  EXPECT_EQ(run_cli({"verify", bad}).code, kVerificationFailed);
}

TEST_F(CliTest, VerifyMalformedInput) {
  auto cert = path("affine.json");
  ASSERT_EQ(run_cli({"chain", "--family", "affine", "--p", "3", "--d", "2", "--out", cert}).code, kOk);
  auto text = slurp(cert);
  auto truncated = path("truncated.json");
  write(truncated, text.substr(0, text.size() / 2));
  EXPECT_EQ(run_cli({"verify", truncated}).code, kUsageError);
  EXPECT_EQ(run_cli({"verify", path("missing.json")}).code, kUsageError);
  auto numeric = json::parse(text);
  numeric["levels"][0]["order"] = 432;
  auto wrong_type = path("numeric.json");
  write(wrong_type, numeric.dump());
  EXPECT_EQ(run_cli({"verify", wrong_type}).code, kUsageError);
}

TEST_F(CliTest, BoundsAffinePlane) {
  auto r = run_cli({"bounds", "--n", "9", "--family", "agl", "--p", "3", "--d", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_NEAR(doc["quantities"]["primitive_upper_bound"].get<double>(), 14.22, 0.01);
  EXPECT_EQ(doc["quantities"]["mibs_lower"], 5);
  EXPECT_EQ(doc["quantities"]["mibs_max"], 8);
  EXPECT_EQ(doc["quantities"]["maximal"], true);
  EXPECT_TRUE(doc["all_hold"].get<bool>());
  auto text = run_cli({"bounds", "--n", "9", "--family", "agl", "--p", "3", "--d", "2",
                       "--format", "text"});
  EXPECT_NE(text.out.find("maximal"), std::string::npos);
}

TEST_F(CliTest, BoundsIndexDegree) {
  auto r = run_cli({"bounds", "--index-degree", "--n", "121", "--order-h", "1597200"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_TRUE(doc["all_hold"].get<bool>());
  EXPECT_GE(doc["comparisons"].size(), 3u);
}

TEST_F(CliTest, BoundsErrors) {
  auto small = run_cli({"bounds", "--n", "6"});
  EXPECT_EQ(small.code, kUsageError);
  EXPECT_NE(small.err.find("n >= 7"), std::string::npos);
  EXPECT_EQ(run_cli({"bounds", "--family", "agl", "--p", "3", "--d", "2", "--mibs", "9"}).code,
            kVerificationFailed);
  EXPECT_EQ(run_cli({"bounds", "--n", "9", "--order-h", "12x"}).code, kUsageError);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kUsageError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(run_cli({"oracle", "--ambient", "Q"}).code, kUsageError);
  auto help = run_cli({"--help"});
  EXPECT_EQ(help.code, kOk);
  EXPECT_NE(help.out.find("chain"), std::string::npos);
}

TEST(GeneratorFile, Parses) {
  std::istringstream in("# comment\n\n5\n(1 2 3)\n  (4 5)  \n()\n");
  std::size_t degree = 0;
  auto gens = parse_generator_file(in, degree);
  EXPECT_EQ(degree, 5u);
  ASSERT_EQ(gens.size(), 3u);
  EXPECT_EQ(gens[1], parse_cycles("(4 5)", 5));
  EXPECT_TRUE(gens[2].is_identity());
}

TEST(GeneratorFile, Errors) {
  std::size_t degree = 0;
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(parse_generator_file(empty, degree), ParseError);
  std::istringstream no_degree("(1 2)\n");
  EXPECT_THROW(parse_generator_file(no_degree, degree), ParseError);
  std::istringstream out_of_range("3\n(1 4)\n");
  EXPECT_THROW(parse_generator_file(out_of_range, degree), ParseError);
}

TEST_F(CliTest, FreshProcessRoundTrip) {
  const std::string binary = MIBS_CLI_BINARY;
  auto cert = path("fresh.json");
  auto cmd = binary + " chain --family affine --p 5 --d 2 --out " + cert + " > /dev/null";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_EQ(std::system((binary + " verify " + cert + " > /dev/null").c_str()), 0);
  auto status = std::system((binary + " chain --family affine --p 2 --d 3 2> /dev/null").c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), kUsageError);
}

}  // namespace
}  // namespace mibs::cli
