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

#include "featstudy/svm.h"

#include <cmath>
#include <random>
#include <vector>

#include "featstudy/error.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace featstudy {
namespace {

using testing::DenseBinary;
using testing::MatrixFromDense;

TrainParams Tight(double c, bool fit_bias) {
  TrainParams p;
  p.c = c;
  p.tolerance = 1e-9;
  p.max_passes = 100000;
  p.fit_bias = fit_bias;
  return p;
}

RealMatrix OneDimensional() { return RealMatrix::FromDense({{1.0}, {-1.0}}); }

const std::vector<std::uint8_t> kOneDimLabels = {1, 0};

TEST(TrainTest, OneDimensionalClosedForm) {
  // 0.5 w^2 + 2c max(0, 1 - w) is minimised at w = min(1, 2c).
  for (double c : {0.1, 0.5, 1.0, 10.0}) {
    const auto r = TrainDetailed(OneDimensional(), kOneDimLabels, Tight(c, false));
    ASSERT_EQ(r.model.weights.size(), 1u);
    EXPECT_NEAR(r.model.weights[0], std::min(1.0, 2 * c), 1e-6) << "c=" << c;
    EXPECT_TRUE(r.converged);
  }
}

TEST(TrainTest, DefaultToleranceStillCloseOnOneDimension) {
  TrainParams p;
  p.fit_bias = false;
  const auto r = TrainDetailed(OneDimensional(), kOneDimLabels, p);
  EXPECT_NEAR(r.model.weights[0], 1.0, 1e-6);
}

TEST(TrainTest, DualFeasibility) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    DenseBinary x = testing::RandomBinary(30, 6, 0.4, rng);
    std::vector<std::uint8_t> y(30);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = (rng() & 1) ? 1 : 0;
    y[0] = 1;
    y[1] = 0;
    for (double c : {0.05, 1.0, 20.0}) {
      TrainParams p;
      p.c = c;
      p.seed = trial;
      const auto r = TrainDetailed(MatrixFromDense(x, 6), y, p);
      ASSERT_EQ(r.dual.size(), 30u);
      for (double a : r.dual) {
        EXPECT_GE(a, 0.0);
        EXPECT_LE(a, c);
      }
    }
  }
}

TEST(TrainTest, LocalOptimalityUnderPerturbation) {
  std::mt19937_64 rng(11);
  DenseBinary x = testing::RandomBinary(40, 5, 0.35, rng);
  std::vector<std::uint8_t> y(40);
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = (x[i][0] + x[i][1] + (rng() % 3 == 0)) >= 1 ? 1 : 0;
  }
  const auto m = MatrixFromDense(x, 5);
  const auto params = Tight(1.0, true);
  const auto model = Train(m, y, params);
  const double base = PrimalObjective(model, m, y, params);

  double norm = 0.0;
  for (double w : model.weights) norm += w * w;
  const double radius = 1e-3 * (1.0 + std::sqrt(norm));
  std::normal_distribution<double> gauss;
  for (int t = 0; t < 100; ++t) {
    std::vector<double> delta(model.weights.size());
    double dn = 0.0;
    for (double& d : delta) {
      d = gauss(rng);
      dn += d * d;
    }
    LinearModel moved = model;
    for (std::size_t j = 0; j < delta.size(); ++j) {
      moved.weights[j] += radius * delta[j] / std::sqrt(dn);
    }
    moved.bias = moved.weights.back();
    EXPECT_LE(base, PrimalObjective(moved, m, y, params) + 1e-12);
  }
}

TEST(TrainTest, BitIdenticalForSameSeed) {
  std::mt19937_64 rng(3);
  DenseBinary x = testing::RandomBinary(50, 8, 0.3, rng);
  std::vector<std::uint8_t> y(50);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = x[i][2] | (i % 7 == 0);
  const auto m = MatrixFromDense(x, 8);
  TrainParams p;
  p.seed = 99;
  EXPECT_EQ(Train(m, y, p), Train(m, y, p));
}

TEST(TrainTest, SwappingLabelsNegatesWeights) {
  std::mt19937_64 rng(5);
  DenseBinary x = testing::RandomBinary(24, 4, 0.5, rng);
  std::vector<std::uint8_t> y(24), flipped(24);
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = (x[i][1] ^ (i % 5 == 0)) ? 1 : 0;
    flipped[i] = 1 - y[i];
  }
  const auto m = MatrixFromDense(x, 4);
  TrainParams p;
  p.seed = 17;
  const auto a = Train(m, y, p);
  const auto b = Train(m, flipped, p);
  ASSERT_EQ(a.weights.size(), b.weights.size());
  for (std::size_t j = 0; j < a.weights.size(); ++j) {
    EXPECT_EQ(a.weights[j], -b.weights[j]);
  }
  EXPECT_EQ(a.bias, -b.bias);
}

TEST(TrainTest, DegenerateInputs) {
  const auto m = MatrixFromDense({{1, 0}, {0, 1}}, 2);
  const std::vector<std::uint8_t> same = {1, 1};
  try {
    Train(m, same, TrainParams{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateTask);
  }
  const auto one = MatrixFromDense({{1, 0}}, 2);
  const std::vector<std::uint8_t> single = {1};
  EXPECT_THROW(Train(one, single, TrainParams{}), Error);
}

TEST(TrainTest, NonFiniteIsSolverError) {
  RealMatrix x = RealMatrix::FromDense({{1.0}, {std::nan("")}});
  try {
    TrainDetailed(x, kOneDimLabels, TrainParams{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSolver);
  }
}

TEST(TrainTest, RejectsBadParams) {
  const auto m = MatrixFromDense({{1}, {0}}, 1);
  const std::vector<std::uint8_t> y = {1, 0};
  TrainParams p;
  p.c = 0.0;
  EXPECT_THROW(Train(m, y, p), Error);
  p = TrainParams{};
  p.tolerance = -1;
  EXPECT_THROW(Train(m, y, p), Error);
  p = TrainParams{};
  p.max_passes = 0;
  EXPECT_THROW(Train(m, y, p), Error);
}

TEST(DecisionTest, Examples) {
  LinearModel zero;
  zero.weights = {0.5, 0.5};
  zero.num_features = 2;
  EXPECT_EQ(DecisionValue(zero, {}), 0.0);
  EXPECT_EQ(Predict(zero, {}), 0);

  LinearModel m;
  m.weights = {1.0, -2.0};
  m.num_features = 2;
  const std::int32_t both[] = {0, 1};
  const std::int32_t first[] = {0};
  const std::int32_t second[] = {1};
  EXPECT_DOUBLE_EQ(DecisionValue(m, both), -1.0);
  EXPECT_EQ(Predict(m, both), 0);
  EXPECT_EQ(Predict(m, first), 1);
  EXPECT_EQ(Predict(m, second), 0);

  const std::int32_t out_of_range[] = {2};
  try {
    DecisionValue(m, out_of_range);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimension);
  }
}

TEST(DecisionTest, OneDimensionalModelScoresPlusOne) {
  const auto x = MatrixFromDense({{1}, {0}}, 1);
  // Binary rows cannot express x = -1, so check through the real solver and a
  // hand-built model with the same weight.
  const auto r = TrainDetailed(OneDimensional(), kOneDimLabels, Tight(1.0, false));
  LinearModel m = r.model;
  const std::int32_t row[] = {0};
  EXPECT_NEAR(DecisionValue(m, row), 1.0, 1e-6);
  EXPECT_EQ(Predict(m, row), 1);
  (void)x;
}

TEST(DecisionTest, BiasIsAdded) {
  const auto m = MatrixFromDense({{1, 0}, {0, 1}, {1, 0}, {0, 1}}, 2);
  const std::vector<std::uint8_t> y = {1, 0, 1, 0};
  const auto model = Train(m, y, Tight(1.0, true));
  ASSERT_EQ(model.weights.size(), 3u);
  EXPECT_EQ(model.bias, model.weights.back());
  EXPECT_DOUBLE_EQ(DecisionValue(model, {}), model.bias);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    EXPECT_EQ(Predict(model, m.Row(r)), y[r]);
  }
}

TEST(ModelJsonTest, RoundTrip) {
  const auto m = MatrixFromDense({{1, 0}, {0, 1}, {1, 1}, {0, 0}}, 2);
  const std::vector<std::uint8_t> y = {1, 0, 1, 0};
  auto model = Train(m, y, TrainParams{});
  model.registry_hash = RegistryHash(m.registry());
  const std::string json = ModelToJson(model);
  EXPECT_NE(json.find("\"registry_hash\""), std::string::npos);
  EXPECT_NE(json.find("\"weights\""), std::string::npos);
  EXPECT_NE(json.find("\"bias\""), std::string::npos);
  EXPECT_EQ(ModelFromJson(json), model);
  EXPECT_THROW(ModelFromJson("{\"weights\": 3}"), Error);
}

}  // namespace
}  // namespace featstudy
