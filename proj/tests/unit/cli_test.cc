// Copyright 2026 The eonsim Authors
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

#include "cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "eonsim/simulator.h"

namespace eonsim::cli {
namespace {

namespace fs = std::filesystem;

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  Invocation r;
  r.code = RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int CountLines(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("eonsim_cli_test_" +
             std::string(::testing::UnitTest::GetInstance()
                             ->current_test_info()
                             ->name()));
    fs::remove_all(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  std::string str(const char* child) const { return (path_ / child).string(); }

 private:
  fs::path path_;
};

TEST(ParseLoadsTest, Range) {
  EXPECT_EQ(ParseLoads("180:300:20"),
            (std::vector<double>{180, 200, 220, 240, 260, 280, 300}));
  EXPECT_EQ(ParseLoads("50:1000:50").size(), 20u);
  EXPECT_EQ(ParseLoads("1:2:0.5"), (std::vector<double>{1, 1.5, 2}));
  EXPECT_EQ(ParseLoads("10:25:10"), (std::vector<double>{10, 20}));
  EXPECT_EQ(ParseLoads("5:5:1"), (std::vector<double>{5}));
}

TEST(ParseLoadsTest, List) {
  EXPECT_EQ(ParseLoads("100"), (std::vector<double>{100}));
  EXPECT_EQ(ParseLoads("100,150.5,200"),
            (std::vector<double>{100, 150.5, 200}));
}

TEST(ParseLoadsTest, Malformed) {
  for (const char* bad : {"", "abc", "1:2", "1:2:3:4", "10:5:1", "1:5:0",
                          "1:5:-1", "0,10", "-5", "200,100", "100,100",
                          "1,,2", "1e400"}) {
    EXPECT_THROW(ParseLoads(bad), ConfigError) << bad;
  }
}

TEST(CliTest, HelpAndVersion) {
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
  Invocation v = Invoke({"--version"});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_NE(v.out.find("0.1.0"), std::string::npos);
}

TEST(CliTest, ConfigErrors) {
  EXPECT_EQ(Invoke({}).code, kExitConfig);
  EXPECT_EQ(Invoke({"bogus"}).code, kExitConfig);
  EXPECT_EQ(Invoke({"sweep", "--preset", "nope", "--loads", "100"}).code,
            kExitConfig);
  EXPECT_EQ(Invoke({"sweep", "--preset", "deeprmsa", "--heuristic", "nope",
                    "--loads", "100"})
                .code,
            kExitConfig);
  EXPECT_EQ(Invoke({"sweep", "--preset", "deeprmsa", "--loads", "300:100:5"})
                .code,
            kExitConfig);
  EXPECT_EQ(Invoke({"sweep", "--preset", "deeprmsa"}).code, kExitConfig);
  EXPECT_EQ(Invoke({"sweep", "--preset", "deeprmsa", "--ordering", "miles",
                    "--loads", "100"})
                .code,
            kExitConfig);
  EXPECT_EQ(Invoke({"bound", "--preset", "deeprmsa", "--heuristic", "kme-ff",
                    "--loads", "100"})
                .code,
            kExitConfig);
  Invocation r = Invoke({"paths", "--topology", "atlantis"});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliTest, UnwritableOutputIsRuntimeError) {
  TempDir dir;
  fs::create_directories(dir.path());
  std::ofstream(dir.path() / "file") << "x";
  Invocation r = Invoke({"sweep", "--preset", "deeprmsa", "--loads", "100",
                  "--trials", "1", "--measured-requests", "100", "--out",
                  (dir.path() / "file" / "sub").string()});
  EXPECT_EQ(r.code, kExitRuntime);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliTest, SweepWritesOneSummaryRowPerLoad) {
  TempDir dir;
  Invocation r = Invoke({"sweep", "--preset", "deeprmsa", "--topology", "nsfnet",
                  "--heuristic", "ksp-ff", "--k", "50", "--ordering", "hops",
                  "--loads", "180:300:20", "--trials", "10", "--seed", "7",
                  "--measured-requests", "500", "--out", dir.str("run")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::string summary = Slurp(dir.path() / "run" / "summary.csv");
  EXPECT_EQ(CountLines(summary), 1 + 7);
  EXPECT_EQ(summary.rfind("series,load_erlangs,trials,mean_sbp,std_sbp,"
                          "blocked_total\n",
                          0),
            0u);
  EXPECT_EQ(CountLines(Slurp(dir.path() / "run" / "trials.csv")), 1 + 70);
  EXPECT_TRUE(fs::exists(dir.path() / "run" / "manifest.json"));
  EXPECT_TRUE(fs::exists(dir.path() / "run" / "metadata.json"));
  EXPECT_FALSE(fs::exists(dir.path() / "run" / "outcomes.csv"));
}

TEST(CliTest, RerunIsByteIdentical) {
  TempDir dir;
  Invocation first = Invoke({"sweep", "--preset", "ptrnet-40", "--topology",
                      "cost239", "--loads", "20,40", "--trials", "3",
                      "--measured-requests", "800", "--record-outcomes",
                      "--jobs", "1", "--out", dir.str("a")});
  ASSERT_EQ(first.code, kExitOk) << first.err;
  Invocation again = Invoke({"rerun", "--manifest", dir.str("a/manifest.json"),
                      "--out", dir.str("b"), "--jobs", "3"});
  ASSERT_EQ(again.code, kExitOk) << again.err;
  for (const char* file :
       {"summary.csv", "trials.csv", "outcomes.csv", "manifest.json"}) {
    std::string a = Slurp(dir.path() / "a" / file);
    EXPECT_FALSE(a.empty()) << file;
    EXPECT_EQ(a, Slurp(dir.path() / "b" / file)) << file;
  }
}

TEST(CliTest, RerunMissingManifest) {
  TempDir dir;
  EXPECT_EQ(Invoke({"rerun", "--manifest", dir.str("none.json"), "--out",
                    dir.str("b")})
                .code,
            kExitConfig);
}

TEST(CliTest, BoundWritesGainReport) {
  TempDir dir;
  Invocation r = Invoke({"bound", "--preset", "ptrnet-40", "--topology", "nsfnet",
                  "--k", "5", "--loads", "150,300", "--trials", "2",
                  "--measured-requests", "1000", "--out", dir.str("g")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("capacity gain"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir.path() / "g" / "gain.json"));
  EXPECT_TRUE(fs::exists(dir.path() / "g" / "summary.csv"));
}

TEST(CliTest, TruncationDemo) {
  Invocation r = Invoke({"truncation-demo", "--samples", "200000"});
  ASSERT_EQ(r.code, kExitOk);
  auto pos = r.out.find("mean_ratio ");
  ASSERT_NE(pos, std::string::npos) << r.out;
  double ratio = std::stod(r.out.substr(pos + 11));
  EXPECT_NEAR(ratio, 0.6869, 0.01);
}

TEST(CliTest, PathsReport) {
  Invocation r = Invoke({"paths", "--topology", "nsfnet", "--k", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("ordered_pairs 182"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("min_paths_per_pair 5"), std::string::npos);
}

TEST(CliTest, SelfCheckPasses) {
  Invocation r = Invoke({"self-check"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos);
}

}  // namespace
}  // namespace eonsim::cli
