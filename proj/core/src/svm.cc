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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "featstudy/error.h"
#include "featstudy/random.h"
#include "json.hpp"

namespace featstudy {
namespace {

// Uniform access to binary and real-valued rows.
struct BinaryRows {
  const FeatureMatrix& m;
  std::size_t rows() const { return m.rows(); }
  std::size_t cols() const { return m.cols(); }
  template <typename Fn>
  void ForEach(std::size_t r, Fn&& fn) const {
    for (std::int32_t c : m.Row(r)) fn(static_cast<std::size_t>(c), 1.0);
  }
};

struct RealRows {
  const RealMatrix& m;
  std::size_t rows() const { return m.rows(); }
  std::size_t cols() const { return m.cols; }
  template <typename Fn>
  void ForEach(std::size_t r, Fn&& fn) const {
    for (std::size_t k = m.row_offsets[r]; k < m.row_offsets[r + 1]; ++k) {
      fn(static_cast<std::size_t>(m.indices[k]), m.values[k]);
    }
  }
};

double Sign(std::uint8_t label) { return label ? 1.0 : -1.0; }

template <typename Rows>
double Margin(const Rows& rows, std::size_t r, const std::vector<double>& w,
              bool fit_bias) {
  double dot = 0.0;
  rows.ForEach(r, [&](std::size_t c, double v) { dot += w[c] * v; });
  if (fit_bias) dot += w[rows.cols()];
  return dot;
}

template <typename Rows>
void CheckProblem(const Rows& rows, std::span<const std::uint8_t> labels) {
  if (labels.size() != rows.rows()) {
    throw Error(ErrorCode::kDimension,
                "label count " + std::to_string(labels.size()) +
                    " does not match row count " +
                    std::to_string(rows.rows()));
  }
  if (rows.rows() < 2) {
    throw Error(ErrorCode::kDegenerateTask, "need at least two rows to train");
  }
  std::size_t positives = 0;
  for (auto l : labels) positives += l ? 1 : 0;
  if (positives == 0 || positives == labels.size()) {
    throw Error(ErrorCode::kDegenerateTask,
                "training labels contain a single class");
  }
}

template <typename Rows>
SolverResult Solve(const Rows& rows, std::span<const std::uint8_t> labels,
                   const TrainParams& params) {
  params.Validate();
  CheckProblem(rows, labels);
  const std::size_t n = rows.rows();
  const std::size_t dim = rows.cols() + (params.fit_bias ? 1 : 0);

  std::vector<double> y(n);
  std::vector<double> bound(n);
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = Sign(labels[i]);
    bound[i] = params.c *
               (labels[i] ? params.positive_cost : params.negative_cost);
    double sq = params.fit_bias ? 1.0 : 0.0;
    rows.ForEach(i, [&](std::size_t, double v) { sq += v * v; });
    diag[i] = sq;
  }

  SolverResult result;
  std::vector<double> w(dim, 0.0);
  std::vector<double>& alpha = result.dual;
  alpha.assign(n, 0.0);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(params.seed);

  for (int pass = 0; pass < params.max_passes; ++pass) {
    SeededShuffle(std::span<std::size_t>(order), rng);
    double pg_max = -std::numeric_limits<double>::infinity();
    double pg_min = std::numeric_limits<double>::infinity();
    for (std::size_t i : order) {
      const double g = y[i] * Margin(rows, i, w, params.fit_bias) - 1.0;
      if (!std::isfinite(g)) {
        throw Error(ErrorCode::kSolver,
                    "non-finite gradient at row " + std::to_string(i) +
                        " in pass " + std::to_string(pass));
      }
      double pg = 0.0;
      if (alpha[i] == 0.0) {
        if (g < 0.0) pg = g;
      } else if (alpha[i] == bound[i]) {
        if (g > 0.0) pg = g;
      } else {
        pg = g;
      }
      pg_max = std::max(pg_max, pg);
      pg_min = std::min(pg_min, pg);
      if (std::fabs(pg) <= 1e-12) continue;
      const double old = alpha[i];
      if (diag[i] == 0.0) {
        // Empty row and no bias: the loss term is constant 1, so the dual
        // variable sits at its bound and w is unaffected.
        alpha[i] = bound[i];
        continue;
      }
      alpha[i] = std::min(std::max(old - g / diag[i], 0.0), bound[i]);
      const double step = (alpha[i] - old) * y[i];
      rows.ForEach(i, [&](std::size_t c, double v) { w[c] += step * v; });
      if (params.fit_bias) w[rows.cols()] += step;
    }
    result.passes = pass + 1;
    result.final_violation = pg_max - pg_min;
    for (double v : w) {
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::kSolver,
                    "non-finite weight after pass " + std::to_string(pass));
      }
    }
    if (result.final_violation <= params.tolerance) {
      result.converged = true;
      break;
    }
  }

  LinearModel& model = result.model;
  model.num_features = rows.cols();
  model.fit_bias = params.fit_bias;
  model.bias = params.fit_bias ? w.back() : 0.0;
  model.weights = std::move(w);
  return result;
}

template <typename Rows>
double Objective(const LinearModel& model, const Rows& rows,
                 std::span<const std::uint8_t> labels,
                 const TrainParams& params) {
  if (model.num_features != rows.cols() || labels.size() != rows.rows()) {
    throw Error(ErrorCode::kDimension, "model does not match problem");
  }
  double reg = 0.0;
  for (double v : model.weights) reg += v * v;
  double loss = 0.0;
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    const double margin =
        Sign(labels[i]) * Margin(rows, i, model.weights, model.fit_bias);
    const double cost =
        params.c * (labels[i] ? params.positive_cost : params.negative_cost);
    loss += cost * std::max(0.0, 1.0 - margin);
  }
  return 0.5 * reg + loss;
}

}  // namespace

void TrainParams::Validate() const {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw Error(ErrorCode::kConfig, "c must be positive");
  }
  if (!(tolerance > 0.0)) {
    throw Error(ErrorCode::kConfig, "tolerance must be positive");
  }
  if (max_passes < 1) {
    throw Error(ErrorCode::kConfig, "max_passes must be at least 1");
  }
  if (!(positive_cost > 0.0) || !(negative_cost > 0.0)) {
    throw Error(ErrorCode::kConfig, "class cost multipliers must be positive");
  }
}

RealMatrix RealMatrix::FromDense(
    const std::vector<std::vector<double>>& dense) {
  RealMatrix m;
  m.cols = dense.empty() ? 0 : dense.front().size();
  for (const auto& row : dense) {
    if (row.size() != m.cols) {
      throw Error(ErrorCode::kDimension, "ragged dense matrix");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      m.indices.push_back(static_cast<std::int32_t>(c));
      m.values.push_back(row[c]);
    }
    m.row_offsets.push_back(m.indices.size());
  }
  return m;
}

SolverResult TrainDetailed(const FeatureMatrix& matrix,
                           std::span<const std::uint8_t> labels,
                           const TrainParams& params) {
  SolverResult result = Solve(BinaryRows{matrix}, labels, params);
  result.model.registry_hash = RegistryHash(matrix.registry());
  return result;
}

SolverResult TrainDetailed(const RealMatrix& matrix,
                           std::span<const std::uint8_t> labels,
                           const TrainParams& params) {
  return Solve(RealRows{matrix}, labels, params);
}

LinearModel Train(const FeatureMatrix& matrix,
                  std::span<const std::uint8_t> labels,
                  const TrainParams& params) {
  return TrainDetailed(matrix, labels, params).model;
}

double DecisionValue(const LinearModel& model,
                     std::span<const std::int32_t> row) {
  double value = model.bias;
  for (std::int32_t c : row) {
    if (c < 0 || static_cast<std::size_t>(c) >= model.num_features) {
      throw Error(ErrorCode::kDimension,
                  "column " + std::to_string(c) + " outside a model of " +
                      std::to_string(model.num_features) + " features");
    }
    value += model.weights[static_cast<std::size_t>(c)];
  }
  return value;
}

std::uint8_t Predict(const LinearModel& model,
                     std::span<const std::int32_t> row) {
  return DecisionValue(model, row) > 0.0 ? 1 : 0;
}

double PrimalObjective(const LinearModel& model, const FeatureMatrix& matrix,
                       std::span<const std::uint8_t> labels,
                       const TrainParams& params) {
  return Objective(model, BinaryRows{matrix}, labels, params);
}

double PrimalObjective(const LinearModel& model, const RealMatrix& matrix,
                       std::span<const std::uint8_t> labels,
                       const TrainParams& params) {
  return Objective(model, RealRows{matrix}, labels, params);
}

std::string ModelToJson(const LinearModel& model) {
  nlohmann::json j;
  j["weights"] = model.weights;
  j["bias"] = model.bias;
  j["registry_hash"] = model.registry_hash;
  j["num_features"] = model.num_features;
  j["fit_bias"] = model.fit_bias;
  return j.dump();
}

LinearModel ModelFromJson(std::string_view json_text) {
  LinearModel model;
  try {
    const auto j = nlohmann::json::parse(json_text);
    model.weights = j.at("weights").get<std::vector<double>>();
    model.bias = j.at("bias").get<double>();
    model.registry_hash = j.at("registry_hash").get<std::string>();
    model.fit_bias = j.value("fit_bias", false);
    model.num_features = j.value(
        "num_features", model.weights.size() - (model.fit_bias ? 1 : 0));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("model: ") + e.what());
  }
  if (model.weights.size() != model.num_features + (model.fit_bias ? 1 : 0)) {
    throw Error(ErrorCode::kParse, "model: weight count mismatch");
  }
  return model;
}

}  // namespace featstudy
