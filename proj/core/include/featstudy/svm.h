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

#ifndef FEATSTUDY_SVM_H_
#define FEATSTUDY_SVM_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "featstudy/feature_matrix.h"

namespace featstudy {

struct TrainParams {
  double c = 1.0;           // hinge-loss trade-off
  double tolerance = 0.1;   // stop when max PG - min PG <= tolerance
  int max_passes = 1000;    // passes over the data
  std::uint64_t seed = 0;   // coordinate order
  bool fit_bias = true;     // bias as a constant feature of value 1
  // Cost multipliers per class; the effective box bound is c * cost.
  double positive_cost = 1.0;
  double negative_cost = 1.0;

  // Throws Error(kConfig) unless c > 0, tolerance > 0, max_passes >= 1 and
  // both costs > 0.
  void Validate() const;
};

// Linear separator. With fit_bias the weight vector carries one trailing
// entry for the constant feature and `bias` repeats that entry.
struct LinearModel {
  std::vector<double> weights;
  double bias = 0.0;
  std::size_t num_features = 0;
  bool fit_bias = false;
  std::string registry_hash;

  bool operator==(const LinearModel&) const = default;
};

// Real-valued CSR rows for problems that are not binary presence matrices.
struct RealMatrix {
  std::size_t cols = 0;
  std::vector<std::size_t> row_offsets = {0};
  std::vector<std::int32_t> indices;
  std::vector<double> values;

  std::size_t rows() const { return row_offsets.size() - 1; }
  // Stores every entry of `dense`, zeros included.
  static RealMatrix FromDense(const std::vector<std::vector<double>>& dense);
};

struct SolverResult {
  LinearModel model;
  std::vector<double> dual;  // one variable per row, each within [0, bound]
  int passes = 0;
  bool converged = false;
  double final_violation = 0.0;  // max PG - min PG of the last pass
};

// L2-regularised L1-loss SVM, solved by dual coordinate descent:
//
//   min_w  1/2 |w|^2 + sum_i c_i max(0, 1 - y_i w.x_i),  y_i in {-1, +1}
//
// Each pass visits every coordinate once in a seeded random order. Labels
// are {0,1} and map to y = -1/+1.
//
// Throws Error(kDegenerateTask) when fewer than two rows or only one class is
// present, and Error(kSolver) if the iterate becomes non-finite.
SolverResult TrainDetailed(const FeatureMatrix& matrix,
                           std::span<const std::uint8_t> labels,
                           const TrainParams& params);
SolverResult TrainDetailed(const RealMatrix& matrix,
                           std::span<const std::uint8_t> labels,
                           const TrainParams& params);

LinearModel Train(const FeatureMatrix& matrix,
                  std::span<const std::uint8_t> labels,
                  const TrainParams& params);

// w.x + bias for a binary row. Throws Error(kDimension) if a column index is
// outside the model.
double DecisionValue(const LinearModel& model,
                     std::span<const std::int32_t> row);

// 1 iff the decision value is strictly positive.
std::uint8_t Predict(const LinearModel& model,
                     std::span<const std::int32_t> row);

// Primal objective of `model` on the given training problem.
double PrimalObjective(const LinearModel& model, const FeatureMatrix& matrix,
                       std::span<const std::uint8_t> labels,
                       const TrainParams& params);
double PrimalObjective(const LinearModel& model, const RealMatrix& matrix,
                       std::span<const std::uint8_t> labels,
                       const TrainParams& params);

// {"bias": r, "registry_hash": s, "weights": [...]} for auditing.
std::string ModelToJson(const LinearModel& model);
LinearModel ModelFromJson(std::string_view json_text);

}  // namespace featstudy

#endif  // FEATSTUDY_SVM_H_
