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
#include <numeric>
#include <string>

#include "featstudy/error.h"

namespace featstudy {

FeatureMatrix ReduceMinDf(const FeatureMatrix& matrix, std::size_t min_df) {
  if (min_df < 1) {
    throw Error(ErrorCode::kConfig, "min_df must be at least 1");
  }
  const auto df = matrix.DocumentFrequency();
  std::vector<std::int32_t> keep;
  for (std::size_t c = 0; c < df.size(); ++c) {
    if (df[c] >= min_df) keep.push_back(static_cast<std::int32_t>(c));
  }
  return matrix.SelectColumns(keep);
}

Chi2Scores ComputeChi2(const FeatureMatrix& matrix,
                       std::span<const std::uint8_t> labels,
                       Chi2Variant variant) {
  if (labels.size() != matrix.rows()) {
    throw Error(ErrorCode::kDimension, "label count does not match rows");
  }
  double class_count[2] = {0.0, 0.0};
  for (auto l : labels) class_count[l ? 1 : 0] += 1.0;
  if (class_count[0] == 0.0 || class_count[1] == 0.0) {
    throw Error(ErrorCode::kDegenerateTask,
                "chi-square needs both classes present");
  }
  const double n = class_count[0] + class_count[1];

  // observed[c][j]: rows of class c containing feature j.
  std::vector<double> observed[2] = {std::vector<double>(matrix.cols(), 0.0),
                                     std::vector<double>(matrix.cols(), 0.0)};
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    auto& counts = observed[labels[r] ? 1 : 0];
    for (std::int32_t c : matrix.Row(r)) counts[static_cast<std::size_t>(c)] += 1.0;
  }

  Chi2Scores out;
  out.scores.assign(matrix.cols(), 0.0);
  for (std::size_t j = 0; j < matrix.cols(); ++j) {
    const double total = observed[0][j] + observed[1][j];
    if (total == 0.0) continue;
    double score = 0.0;
    if (variant == Chi2Variant::kObservedExpected) {
      for (int c = 0; c < 2; ++c) {
        const double expected = class_count[c] / n * total;
        const double diff = observed[c][j] - expected;
        score += diff * diff / expected;
      }
    } else {
      const double a = observed[1][j];       // present, positive
      const double b = observed[0][j];       // present, negative
      const double cc = class_count[1] - a;  // absent, positive
      const double d = class_count[0] - b;   // absent, negative
      const double denom = (a + b) * (cc + d) * (a + cc) * (b + d);
      if (denom > 0.0) {
        const double cross = a * d - b * cc;
        score = n * cross * cross / denom;
      }
    }
    out.scores[j] = score;
  }
  return out;
}

std::size_t PercentileCount(int percentile, std::size_t total) {
  return static_cast<std::size_t>(percentile) * total / 100;
}

std::vector<std::int32_t> RankColumns(const Chi2Scores& scores) {
  std::vector<std::int32_t> order(scores.scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&scores](std::int32_t a, std::int32_t b) {
                     return scores.scores[static_cast<std::size_t>(a)] >
                            scores.scores[static_cast<std::size_t>(b)];
                   });
  return order;
}

SelectionResult SelectPercentile(const Chi2Scores& scores, int percentile) {
  if (percentile < 1 || percentile > 100) {
    throw Error(ErrorCode::kConfig, "percentile must be within [1, 100], got " +
                                        std::to_string(percentile));
  }
  SelectionResult result;
  result.percentile = percentile;
  result.k = PercentileCount(percentile, scores.scores.size());
  if (result.k == 0) {
    throw Error(ErrorCode::kEmptySelection,
                "percentile " + std::to_string(percentile) + " of " +
                    std::to_string(scores.scores.size()) +
                    " features selects nothing");
  }
  auto ranked = RankColumns(scores);
  ranked.resize(result.k);
  std::sort(ranked.begin(), ranked.end());
  result.kept_columns = std::move(ranked);
  return result;
}

}  // namespace featstudy
