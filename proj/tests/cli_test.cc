// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end runs of the command-line tool on the committed listings corpus.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"
#include "test_util.h"

namespace gmfa {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
};

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gmfa_cli_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  RunResult Run(const std::string& args) const {
    const fs::path out = dir_ / "stdout.txt";
    const std::string cmd = std::string(GMFA_CLI_PATH) + " " + args + " > " +
                            out.string() + " 2> " + (dir_ / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = Slurp(out);
    return r;
  }

  static std::string ListingsFlags() {
    return "--dataset " + testing::DataPath("listings.csv") + " --costs " +
           testing::DataPath("listings_costs.csv");
  }

  fs::path dir_;
};

TEST_F(CliTest, MineListings) {
  const RunResult r = Run(ListingsFlags() + " mine --tau 0.3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "tau=0.3 n=10 m=4\n0111\n1110\n1001\n");
}

TEST_F(CliTest, MineWithFullThresholdKeepsOnlyTheEmptySet) {
  const RunResult r = Run(ListingsFlags() + " mine --tau 1.0");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "tau=1 n=10 m=4\n0000\n");
}

TEST_F(CliTest, MineMissingFile) {
  EXPECT_EQ(Run("--dataset /nonexistent.csv --costs /nonexistent.csv mine").code, 2);
  EXPECT_EQ(Run(ListingsFlags() + " mine --tau 0").code, 2);
}

TEST_F(CliTest, SolveFromMinedFile) {
  const fs::path mined = dir_ / "listings.mfs";
  ASSERT_EQ(Run(ListingsFlags() + " mine --tau 0.3 --out " + mined.string()).code, 0);
  EXPECT_EQ(Slurp(mined), "tau=0.3 n=10 m=4\n0111\n1110\n1001\n");
  for (const char* solver : {"bgmfa", "igmfa", "ggmfa"}) {
    const RunResult r = Run(ListingsFlags() + " solve --mined " + mined.string() +
                            " --budget 1300 --solver " + solver);
    ASSERT_EQ(r.code, 0) << solver;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["chosen"], nlohmann::json({"TV", "Internet", "Washer"})) << solver;
    EXPECT_EQ(j["gain"], 8) << solver;
  }
  const auto j = nlohmann::json::parse(
      Run(ListingsFlags() + " solve --tau 0.3 --budget 1300").out);
  EXPECT_EQ(j["stats"]["gain_evals"], 3);
}

TEST_F(CliTest, SolveEdgeCases) {
  auto solve = [&](const std::string& extra) {
    return Run(ListingsFlags() + " solve --tau 0.3 " + extra);
  };
  auto j = nlohmann::json::parse(solve("--budget 0").out);
  EXPECT_EQ(j["chosen"], nlohmann::json::array());
  EXPECT_EQ(j["gain"], 1);
  j = nlohmann::json::parse(solve("--budget 5000 --row 1").out);
  EXPECT_EQ(j["chosen"], nlohmann::json::array());
  EXPECT_EQ(j["gain"], 13);
  j = nlohmann::json::parse(solve("--budget 700 --attrs TV,Internet").out);
  EXPECT_EQ(j["chosen"], nlohmann::json({"Washer"}));
  EXPECT_EQ(j["gain"], 8);

  const RunResult csv = Run("--csv " + ListingsFlags() + " solve --tau 0.3 --budget 1300");
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')),
            "chosen,gain,nodes_generated,gain_evals,elapsed_ms");
  EXPECT_NE(csv.out.find("\nTV;Internet;Washer,8,"), std::string::npos) << csv.out;
}

TEST_F(CliTest, SolveOtherGains) {
  const fs::path feedback = dir_ / "feedback.csv";
  std::ofstream(feedback) << "row_index,score\n1,1\n";
  auto j = nlohmann::json::parse(
      Run(ListingsFlags() + " solve --gain feedback --feedback " + feedback.string() +
          " --budget 550")
          .out);
  EXPECT_EQ(j["gain"], 2);
  EXPECT_EQ(j["chosen"], nlohmann::json({"TV", "Internet"}));

  const fs::path workload = dir_ / "workload.txt";
  std::ofstream(workload) << "Internet,Washer\n";
  const RunResult r = Run(ListingsFlags() + " solve --gain workload --workload " +
                          workload.string() + " --budget 950");
  ASSERT_EQ(r.code, 0);
  j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["gain"].get<double>(), 10.0 / 3.0, 1e-12);
}

TEST_F(CliTest, ValidationErrorsExitTwo) {
  EXPECT_EQ(Run(ListingsFlags() + " solve --budget 100 --attrs Sauna").code, 2);
  EXPECT_EQ(Run(ListingsFlags() + " solve --budget -5").code, 2);
  EXPECT_EQ(Run(ListingsFlags() + " solve --budget 5 --solver magic").code, 2);
  EXPECT_EQ(Run(ListingsFlags() + " solve --budget 5 --row 10").code, 2);
  EXPECT_EQ(Run("--json --csv " + ListingsFlags() + " solve --budget 5").code, 2);
  EXPECT_EQ(Run("bench --values").code, 2);
  EXPECT_EQ(Run("").code, 2);
  EXPECT_EQ(Run("--help").code, 0);

  const fs::path bad = dir_ / "bad.csv";
  std::ofstream(bad) << "Breakfast,TV,Internet,Washer\n1,2,0,0\n";
  EXPECT_EQ(Run("--dataset " + bad.string() + " --costs " +
                testing::DataPath("listings_costs.csv") + " mine")
                .code,
            2);
}

TEST_F(CliTest, FbcCommand) {
  auto j = nlohmann::json::parse(Run(ListingsFlags() + " fbc --tau 0.3 --bits 1111").out);
  EXPECT_EQ(j["fbc"], 13);
  EXPECT_EQ(j["node"], "1111");
  j = nlohmann::json::parse(
      Run(ListingsFlags() + " fbc --tau 0.3 --node Internet,Washer --method apriori").out);
  EXPECT_EQ(j["fbc"], 4);
  EXPECT_EQ(j["attributes"], nlohmann::json({"Internet", "Washer"}));
  EXPECT_EQ(Run(ListingsFlags() + " fbc --tau 0.3 --bits 111").code, 2);
}

TEST_F(CliTest, GenIsDeterministic) {
  const std::string a = (dir_ / "a").string();
  const std::string b = (dir_ / "b").string();
  ASSERT_EQ(Run("--seed 5 --dataset " + a + ".csv --costs " + a +
                "_costs.csv gen --n 300 --m 8")
                .code,
            0);
  ASSERT_EQ(Run("--seed 5 --dataset " + b + ".csv --costs " + b +
                "_costs.csv gen --n 300 --m 8")
                .code,
            0);
  EXPECT_EQ(Slurp(a + ".csv"), Slurp(b + ".csv"));
  EXPECT_EQ(Slurp(a + "_costs.csv"), Slurp(b + "_costs.csv"));
  EXPECT_EQ(Run("--dataset " + a + ".csv --costs " + a + "_costs.csv gen --density x")
                .code,
            2);
}

TEST_F(CliTest, TimeoutExitsThree) {
  const std::string d = (dir_ / "wide").string();
  ASSERT_EQ(Run("--dataset " + d + ".csv --costs " + d +
                "_costs.csv gen --n 200 --m 24 --density uniform:0.5")
                .code,
            0);
  const RunResult r = Run("--timeout-s 0.001 --dataset " + d + ".csv --costs " + d +
                          "_costs.csv solve --tau 0.2 --budget 1000000 --solver bgmfa");
  EXPECT_EQ(r.code, 3);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["stats"]["timed_out"], true);
}

TEST_F(CliTest, BenchCsvAndJson) {
  const RunResult csv =
      Run("bench --sweep m --values 4,6 --n 500 --budget 500 --tau 0.2");
  ASSERT_EQ(csv.code, 0);
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "sweep_var,value,algorithm,rep,elapsed_ms,gain_ms,prep_ms,gain_evals,"
                  "nodes,result,timeout");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 6);

  const RunResult json = Run("--json bench --sweep tau --values 0.1,0.3 --n 500 --m 6 "
                             "--algorithms fbc,afbc");
  ASSERT_EQ(json.code, 0);
  const auto j = nlohmann::json::parse(json.out);
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[0]["result"], j[1]["result"]);
  EXPECT_EQ(j[0]["algorithm"], "fbc");
}

}  // namespace
}  // namespace gmfa
