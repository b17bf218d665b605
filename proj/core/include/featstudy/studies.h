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

#ifndef FEATSTUDY_STUDIES_H_
#define FEATSTUDY_STUDIES_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "featstudy/corpus.h"
#include "featstudy/eval.h"
#include "featstudy/feature_matrix.h"
#include "featstudy/lexicon.h"
#include "featstudy/selection.h"
#include "featstudy/svm.h"

namespace featstudy {

struct StudyParams {
  TrainParams train;
  int folds = 5;
  std::uint64_t seed = 0;  // fold plan seed
  std::size_t jobs = 1;    // conditions evaluated concurrently; 0 = all cores
};

struct GroupAblation {
  FeatureGroup group = FeatureGroup::kLexical;
  std::size_t features_without_group = 0;
  MetricSummary summary;
  double delta_f1_points = 0.0;  // 100 * (ablated avg F1 - baseline avg F1)
};

struct AblationResult {
  std::string class_id;
  std::size_t total_features = 0;
  std::map<FeatureGroup, std::size_t> group_sizes;
  std::string fold_plan_hash;
  MetricSummary baseline;
  std::vector<GroupAblation> per_group;  // one per group, enum order
};

// Baseline on every group, then each group held out in turn. All conditions
// share one fold plan, so deltas reflect the features alone.
AblationResult RunAblation(const FeatureMatrix& full, const LabeledTask& task,
                           const StudyParams& params);
// Encodes all seven groups first.
AblationResult RunAblation(const Corpus& corpus, const LexiconSet& lexicons,
                           std::string_view class_id,
                           const StudyParams& params);

enum class SelectionProtocol {
  kGlobal,   // score once on all rows, then cross-validate
  kPerFold,  // score on each fold's training rows (protocol deviation)
};

std::string_view ProtocolName(SelectionProtocol protocol);
std::string_view Chi2VariantName(Chi2Variant variant);

// [1, 5, 10, ..., 100].
std::vector<int> DefaultGrid();

struct EliminationParams {
  std::vector<int> grid = DefaultGrid();
  std::size_t min_df = 2;
  Chi2Variant chi2 = Chi2Variant::kObservedExpected;
  SelectionProtocol protocol = SelectionProtocol::kGlobal;
};

struct CurvePoint {
  int percentile = 0;
  std::size_t k = 0;
  MetricSummary summary;
};

struct Peak {
  int percentile = 0;
  std::size_t k = 0;
  double avg_f1 = 0.0;

  bool operator==(const Peak&) const = default;
};

struct EliminationCurve {
  std::string class_id;
  std::size_t total_features = 0;
  std::size_t reduced_features = 0;
  std::string fold_plan_hash;
  SelectionProtocol protocol = SelectionProtocol::kGlobal;
  Chi2Variant chi2 = Chi2Variant::kObservedExpected;
  std::vector<int> grid;
  std::vector<CurvePoint> points;  // grid order, skipped points omitted
  std::vector<int> skipped;        // percentiles that selected nothing
  Peak peak;
};

// Earliest point attaining the maximum avg F1. Throws Error(kConfig) on an
// empty curve.
Peak FirstPeak(std::span<const CurvePoint> points);

// Reduction, chi-square ranking and cumulative percentile evaluation on the
// fully encoded matrix.
EliminationCurve RunElimination(const FeatureMatrix& full,
                                const LabeledTask& task,
                                const StudyParams& params,
                                const EliminationParams& elimination);
EliminationCurve RunElimination(const Corpus& corpus,
                                const LexiconSet& lexicons,
                                std::string_view class_id,
                                const StudyParams& params,
                                const EliminationParams& elimination);

// Throws Error(kConfig) unless the grid is non-empty, strictly ascending and
// within [1, 100].
void ValidateGrid(std::span<const int> grid);

}  // namespace featstudy

#endif  // FEATSTUDY_STUDIES_H_
