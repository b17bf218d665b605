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

#include "featstudy/selection.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "featstudy/error.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace featstudy {
namespace {

using testing::DenseBinary;
using testing::MatrixFromDense;

DenseBinary Column(const std::vector<int>& values) {
  DenseBinary x;
  for (int v : values) x.push_back({v});
  return x;
}

TEST(ReduceMinDfTest, ThresholdBoundary) {
  // Column 0 in one row, column 1 in two rows, column 2 in three.
  const auto m = MatrixFromDense({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}, 3);
  const auto reduced = ReduceMinDf(m, 2);
  ASSERT_EQ(reduced.cols(), 2u);
  EXPECT_EQ(reduced.registry()[0].name, "f1");
  EXPECT_EQ(reduced.registry()[1].name, "f2");
  EXPECT_EQ(reduced.rows(), 3u);
}

TEST(ReduceMinDfTest, MinDfOneIsIdentityAndZeroRejected) {
  const auto m = MatrixFromDense({{1, 0}, {0, 1}}, 2);
  EXPECT_EQ(ReduceMinDf(m, 1), m);
  EXPECT_THROW(ReduceMinDf(m, 0), Error);
}

TEST(ReduceMinDfTest, Idempotent) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const auto m = MatrixFromDense(testing::RandomBinary(15, 20, 0.1, rng), 20);
    const auto once = ReduceMinDf(m);
    EXPECT_EQ(ReduceMinDf(once), once);
    for (std::size_t df : once.DocumentFrequency()) EXPECT_GE(df, 2u);
  }
}

TEST(Chi2Test, Examples) {
  const std::vector<std::uint8_t> independent = {1, 0, 1, 0};
  const std::vector<std::uint8_t> aligned = {1, 1, 0, 0};
  const auto x = MatrixFromDense(Column({1, 1, 0, 0}), 1);
  EXPECT_EQ(ComputeChi2(x, independent).scores[0], 0.0);
  EXPECT_DOUBLE_EQ(ComputeChi2(x, aligned).scores[0], 2.0);
}

TEST(Chi2Test, ContingencyVariant) {
  // A = present&pos, B = present&neg, C = absent&pos, D = absent&neg.
  const auto x = MatrixFromDense(Column({1, 1, 1, 0, 0, 0, 1, 0}), 1);
  const std::vector<std::uint8_t> y = {1, 1, 0, 1, 0, 0, 0, 0};
  const double a = 2, b = 2, c = 1, d = 3, n = 8;
  const double expected = n * (a * d - b * c) * (a * d - b * c) /
                          ((a + b) * (c + d) * (a + c) * (b + d));
  EXPECT_NEAR(ComputeChi2(x, y, Chi2Variant::kContingency).scores[0], expected,
              1e-12);
}

TEST(Chi2Test, UnseenColumnScoresZeroAndSingleClassThrows) {
  const auto x = MatrixFromDense({{1, 0}, {0, 0}}, 2);
  const std::vector<std::uint8_t> y = {1, 0};
  EXPECT_EQ(ComputeChi2(x, y).scores[1], 0.0);
  const std::vector<std::uint8_t> single = {1, 1};
  try {
    ComputeChi2(x, single);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateTask);
  }
}

TEST(Chi2Test, MatchesBruteForce) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 2 + rng() % 11;
    const std::size_t cols = 1 + rng() % 8;
    const auto x = testing::RandomBinary(rows, cols, 0.5, rng);
    std::vector<int> yi(rows);
    for (auto& v : yi) v = rng() & 1;
    yi[0] = 1;
    yi[1] = 0;
    const std::vector<std::uint8_t> y(yi.begin(), yi.end());
    const auto got = ComputeChi2(MatrixFromDense(x, cols), y).scores;
    const auto want = testing::BruteForceChi2(x, yi);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t j = 0; j < cols; ++j) EXPECT_NEAR(got[j], want[j], 1e-10);
  }
}

TEST(PercentileTest, FloorRule) {
  EXPECT_EQ(PercentileCount(5, 5761), 288u);
  EXPECT_EQ(PercentileCount(15, 5761), 864u);
  EXPECT_EQ(PercentileCount(55, 5761), 3168u);
  EXPECT_EQ(PercentileCount(100, 5761), 5761u);
  EXPECT_EQ(PercentileCount(1, 99), 0u);
}

TEST(SelectPercentileTest, TopScoresWithIndexTieBreak) {
  Chi2Scores s{{0.5, 3.0, 1.0, 3.0, 0.0, 1.0, 2.0, 0.1, 0.2, 0.3}};
  const auto r = SelectPercentile(s, 30);
  EXPECT_EQ(r.k, 3u);
  EXPECT_EQ(r.kept_columns, (std::vector<std::int32_t>{1, 3, 6}));
  // Tie between columns 2 and 5 at the boundary goes to column 2.
  const auto r2 = SelectPercentile(s, 40);
  EXPECT_EQ(r2.kept_columns, (std::vector<std::int32_t>{1, 2, 3, 6}));
  EXPECT_EQ(SelectPercentile(s, 100).kept_columns.size(), 10u);
  EXPECT_EQ(RankColumns(s),
            (std::vector<std::int32_t>{1, 3, 6, 2, 5, 0, 9, 8, 7, 4}));
}

TEST(SelectPercentileTest, Errors) {
  Chi2Scores s{{1.0, 2.0}};
  try {
    SelectPercentile(s, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptySelection);
  }
  EXPECT_THROW(SelectPercentile(s, 0), Error);
  EXPECT_THROW(SelectPercentile(s, 101), Error);
}

TEST(SelectPercentileTest, Nesting) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> score(0, 4);  // many ties
  for (int t = 0; t < 30; ++t) {
    Chi2Scores s;
    for (int j = 0; j < 137; ++j) s.scores.push_back(score(rng));
    std::set<std::int32_t> previous;
    for (int p = 1; p <= 100; ++p) {
      const auto r = SelectPercentile(s, p);
      EXPECT_TRUE(std::is_sorted(r.kept_columns.begin(), r.kept_columns.end()));
      const std::set<std::int32_t> kept(r.kept_columns.begin(),
                                        r.kept_columns.end());
      EXPECT_TRUE(std::includes(kept.begin(), kept.end(), previous.begin(),
                                previous.end()));
      previous = kept;
    }
  }
}

}  // namespace
}  // namespace featstudy
