/*
 * Copyright 2026 The featstudy Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.h"

#include <boost/tokenizer.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "testing/oracles.h"

namespace featstudy::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "featstudy");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  RunResult r;
  r.code = Main(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> DemoArgs(const std::string& command,
                                  const fs::path& out) {
  const fs::path demo = testing::DemoDir();
  return {command,
          "--corpus", (demo / "corpus.jsonl").string(),
          "--schema", (demo / "schema.json").string(),
          "--lexicons", (demo / "lexicons").string(),
          "--out", out.string()};
}

std::vector<std::vector<std::string>> ReadCsv(const fs::path& path) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(testing::ReadFile(path));
  std::string line;
  while (std::getline(in, line)) {
    boost::tokenizer<boost::escaped_list_separator<char>> tok(line);
    rows.emplace_back(tok.begin(), tok.end());
  }
  return rows;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = testing::MakeTempDir(
        ::testing::UnitTest::GetInstance()->current_test_info()->name());
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

TEST_F(CliTest, FeaturizeDemoListsSevenGroups) {
  const auto r = RunCli(DemoArgs("featurize", dir_));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(testing::ReadFile(dir_ / "features.json"));
  const std::size_t total = j.at("total_features").get<std::size_t>();
  std::size_t sum = 0;
  ASSERT_EQ(j.at("group_sizes").size(), 7u);
  for (const auto& [group, size] : j.at("group_sizes").items()) {
    sum += size.get<std::size_t>();
    EXPECT_EQ(j.at("sans_group_counts").at(group).get<std::size_t>(),
              total - size.get<std::size_t>());
  }
  EXPECT_EQ(sum, total);
  EXPECT_EQ(j.at("registry").size(), total);
  const auto sizes = ReadCsv(dir_ / "group_sizes.csv");
  EXPECT_EQ(sizes.size(), 8u);
  EXPECT_TRUE(fs::exists(dir_ / "registry.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "run_config.json"));
}

TEST_F(CliTest, LexicalOnlyFeaturize) {
  auto args = DemoArgs("featurize", dir_);
  args.insert(args.end(), {"--groups", "lexical"});
  const auto r = RunCli(args);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(testing::ReadFile(dir_ / "features.json"));
  for (const auto& [group, size] : j.at("group_sizes").items()) {
    if (group != "lexical") {
      EXPECT_EQ(size.get<std::size_t>(), 0u) << group;
    }
  }
  EXPECT_GT(j.at("group_sizes").at("lexical").get<std::size_t>(), 0u);
}

TEST_F(CliTest, CvOnSeparablePlantedCorpus) {
  testing::PlantedCorpusOptions opts;
  opts.documents = 150;
  opts.noise_vocabulary = 300;
  // One token present exactly in the positive documents.
  opts.signal_vocabulary = 1;
  opts.signal_rate = 1.0;
  const auto planted = testing::MakePlantedCorpus(opts);
  testing::WritePlantedCorpus(planted, dir_ / "data");
  const auto r = RunCli({"cv", "--corpus", (dir_ / "data/corpus.jsonl").string(),
                      "--schema", (dir_ / "data/schema.json").string(),
                      "--lexicons", (dir_ / "data/lexicons").string(),
                      "--out", (dir_ / "out").string(), "--class",
                      testing::kPlantedClass});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(testing::ReadFile(dir_ / "out/cv_planted.json"));
  EXPECT_EQ(j.at("summary").at("avg_f1").get<double>(), 1.0);
}

TEST_F(CliTest, CvMatchesAblationBaseline) {
  auto cv = DemoArgs("cv", dir_ / "cv");
  cv.insert(cv.end(), {"--class", "evidence_of_depression", "--seed", "3"});
  auto ablate = DemoArgs("ablate", dir_ / "ablate");
  ablate.insert(ablate.end(),
                {"--class", "evidence_of_depression", "--seed", "3"});
  ASSERT_EQ(RunCli(cv).code, kExitOk);
  ASSERT_EQ(RunCli(ablate).code, kExitOk);
  const json a = json::parse(
      testing::ReadFile(dir_ / "cv/cv_evidence_of_depression.json"));
  const json b = json::parse(
      testing::ReadFile(dir_ / "ablate/ablation_evidence_of_depression.json"));
  EXPECT_EQ(a.at("summary").at("avg_f1").dump(),
            b.at("ablation").at("baseline").at("avg_f1").dump());
  EXPECT_EQ(a.at("fold_plan_hash"), b.at("ablation").at("fold_plan_hash"));
}

TEST_F(CliTest, UnknownClassIsConfigError) {
  auto args = DemoArgs("cv", dir_);
  args.insert(args.end(), {"--class", "anxiety"});
  const auto r = RunCli(args);
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("anxiety"), std::string::npos);
}

TEST_F(CliTest, ValidationFailuresExitTwo) {
  EXPECT_EQ(RunCli({"cv"}).code, kExitConfig);
  EXPECT_EQ(RunCli({"bogus"}).code, kExitConfig);
  auto missing = DemoArgs("cv", dir_);
  missing[2] = (dir_ / "nope.jsonl").string();
  missing.insert(missing.end(), {"--class", "fatigue_or_loss_of_energy"});
  const auto r = RunCli(missing);
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("nope.jsonl"), std::string::npos);

  auto folds = DemoArgs("cv", dir_);
  folds.insert(folds.end(), {"--class", "fatigue_or_loss_of_energy",
                             "--folds", "1"});
  EXPECT_EQ(RunCli(folds).code, kExitConfig);

  auto grid = DemoArgs("eliminate", dir_);
  grid.insert(grid.end(), {"--class", "fatigue_or_loss_of_energy",
                           "--grid", "10,5"});
  EXPECT_EQ(RunCli(grid).code, kExitConfig);

  auto groups = DemoArgs("cv", dir_);
  groups.insert(groups.end(), {"--class", "fatigue_or_loss_of_energy",
                               "--groups", "lexical,bogus"});
  EXPECT_EQ(RunCli(groups).code, kExitConfig);

  auto too_many = DemoArgs("cv", dir_);
  too_many.insert(too_many.end(), {"--class", "fatigue_or_loss_of_energy",
                                   "--folds", "60"});
  EXPECT_EQ(RunCli(too_many).code, kExitConfig);
}

TEST_F(CliTest, MalformedCorpusExitsTwoWithLine) {
  fs::copy(testing::DemoDir() / "schema.json", dir_ / "schema.json");
  {
    std::ofstream(dir_ / "bad.jsonl")
        << "{\"id\": \"a\", \"text\": \"x\", \"labels\": []}\n{broken\n";
  }
  const auto r = RunCli({"featurize", "--corpus", (dir_ / "bad.jsonl").string(),
                      "--schema", (dir_ / "schema.json").string(),
                      "--lexicons", (testing::DemoDir() / "lexicons").string(),
                      "--out", (dir_ / "out").string()});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST_F(CliTest, AblateWritesTriplePerClass) {
  auto args = DemoArgs("ablate", dir_);
  args.insert(args.end(),
              {"--class", "depressed_mood,no_evidence_of_depression"});
  const auto r = RunCli(args);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const std::string stem :
       {"ablation_depressed_mood", "ablation_no_evidence_of_depression"}) {
    for (const std::string ext : {".json", ".csv", ".svg"}) {
      EXPECT_TRUE(fs::exists(dir_ / (stem + ext))) << stem << ext;
    }
    EXPECT_EQ(ReadCsv(dir_ / (stem + ".csv")).size(), 8u);
  }
}

TEST_F(CliTest, EliminateDefaultGridAndPeaks) {
  auto args = DemoArgs("eliminate", dir_);
  args.insert(args.end(), {"--class", "all"});
  const auto r = RunCli(args);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json config = json::parse(testing::ReadFile(dir_ / "run_config.json"));
  const auto classes = config.at("classes").get<std::vector<std::string>>();
  ASSERT_FALSE(classes.empty());
  const auto peaks = ReadCsv(dir_ / "peaks.csv");
  EXPECT_EQ(peaks.size(), classes.size() + 1);
  for (const auto& id : classes) {
    const json j = json::parse(
        testing::ReadFile(dir_ / ("elimination_" + FileStem(id) + ".json")));
    const auto& curve = j.at("elimination");
    EXPECT_EQ(curve.at("grid").size(), 21u);
    EXPECT_EQ(curve.at("points").size() + curve.at("skipped").size(), 21u);
  }
  EXPECT_NE(r.out.find("percentile"), std::string::npos);
}

TEST_F(CliTest, ReportRerendersIdenticalCharts) {
  auto args = DemoArgs("ablate", dir_ / "run");
  args.insert(args.end(), {"--class", "evidence_of_depression"});
  ASSERT_EQ(RunCli(args).code, kExitOk);
  const auto r =
      RunCli({"report", "--in",
           (dir_ / "run/ablation_evidence_of_depression.json").string(),
           "--out", (dir_ / "again").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const std::string ext : {".csv", ".svg"}) {
    const std::string name = "ablation_evidence_of_depression" + ext;
    EXPECT_EQ(testing::ReadFile(dir_ / "again" / name),
              testing::ReadFile(dir_ / "run" / name));
  }
}

TEST_F(CliTest, SameSeedIsByteIdenticalAcrossJobs) {
  for (const std::string jobs : {"1", "3"}) {
    auto args = DemoArgs("ablate", dir_ / jobs);
    args.insert(args.end(), {"--class", "depressive_symptoms", "--seed", "9",
                             "--jobs", jobs});
    ASSERT_EQ(RunCli(args).code, kExitOk);
  }
  for (const std::string ext : {".json", ".csv", ".svg"}) {
    const std::string name = "ablation_depressive_symptoms" + ext;
    EXPECT_EQ(testing::ReadFile(dir_ / "1" / name),
              testing::ReadFile(dir_ / "3" / name));
  }
}

TEST(FileStemTest, SanitisesIds) {
  EXPECT_EQ(FileStem("depressed_mood"), "depressed_mood");
  EXPECT_EQ(FileStem("a/b c"), FileStem("a/b c"));
  EXPECT_EQ(FileStem("a/b c").find('/'), std::string::npos);
}

}  // namespace
}  // namespace featstudy::cli
