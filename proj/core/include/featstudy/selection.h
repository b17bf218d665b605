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

#ifndef FEATSTUDY_SELECTION_H_
#define FEATSTUDY_SELECTION_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "featstudy/feature_matrix.h"

namespace featstudy {

// Drops columns present in fewer than `min_df` rows. Row count is unchanged.
// Throws Error(kConfig) for min_df < 1.
FeatureMatrix ReduceMinDf(const FeatureMatrix& matrix, std::size_t min_df = 2);

enum class Chi2Variant {
  // sum over classes of (observed - expected)^2 / expected, counting feature
  // presence only.
  kObservedExpected,
  // Full 2x2 contingency statistic N(AD-BC)^2 / ((A+B)(C+D)(A+C)(B+D)).
  kContingency,
};

struct Chi2Scores {
  std::vector<double> scores;  // registry order
};

// One score per column. Columns that never occur score 0.
// Throws Error(kDegenerateTask) if the labels hold a single class.
Chi2Scores ComputeChi2(const FeatureMatrix& matrix,
                       std::span<const std::uint8_t> labels,
                       Chi2Variant variant = Chi2Variant::kObservedExpected);

// Number of columns kept at `percentile` out of `total`: floor(p * F / 100).
std::size_t PercentileCount(int percentile, std::size_t total);

struct SelectionResult {
  int percentile = 0;
  std::vector<std::int32_t> kept_columns;  // ascending
  std::size_t k = 0;
};

// Keeps the top floor(p * F / 100) columns by score, ties going to the lower
// column index. Throws Error(kConfig) when percentile is outside [1, 100] and
// Error(kEmptySelection) when the count rounds down to zero.
SelectionResult SelectPercentile(const Chi2Scores& scores, int percentile);

// Columns ranked by descending score, ties by ascending index.
std::vector<std::int32_t> RankColumns(const Chi2Scores& scores);

}  // namespace featstudy

#endif  // FEATSTUDY_SELECTION_H_
