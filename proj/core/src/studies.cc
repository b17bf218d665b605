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

#include "featstudy/studies.h"

#include <optional>
#include <utility>

#include "featstudy/error.h"
#include "featstudy/featurize.h"
#include "featstudy/parallel.h"

namespace featstudy {
namespace {

std::string Context(std::string_view class_id, std::string_view what) {
  return "class '" + std::string(class_id) + "', " + std::string(what);
}

}  // namespace

AblationResult RunAblation(const FeatureMatrix& full, const LabeledTask& task,
                           const StudyParams& params) {
  AblationResult result;
  result.class_id = task.class_id;
  result.total_features = full.cols();
  result.group_sizes = GroupSizes(full.registry());

  FoldPlan plan;
  try {
    plan = StratifiedFolds(task.labels, params.folds, params.seed);
  } catch (const Error& e) {
    throw e.WithContext(Context(task.class_id, "fold plan"));
  }
  result.fold_plan_hash = plan.Hash();

  // Condition 0 is the baseline; condition g+1 holds out group g.
  constexpr std::size_t kConditions = kAllGroups.size() + 1;
  std::vector<MetricSummary> summaries(kConditions);
  std::vector<std::size_t> widths(kConditions);
  ParallelFor(kConditions, params.jobs, [&](std::size_t i) {
    const std::string what =
        i == 0 ? std::string("baseline")
               : "sans " + std::string(GroupName(kAllGroups[i - 1]));
    try {
      const FeatureMatrix m = i == 0 ? full : Ablate(full, kAllGroups[i - 1]);
      widths[i] = m.cols();
      summaries[i] = CrossValidate(m, task.labels, params.train, plan);
    } catch (const Error& e) {
      throw e.WithContext(Context(task.class_id, what));
    }
  });

  result.baseline = summaries[0];
  for (std::size_t g = 0; g < kAllGroups.size(); ++g) {
    GroupAblation entry;
    entry.group = kAllGroups[g];
    entry.features_without_group = widths[g + 1];
    entry.summary = std::move(summaries[g + 1]);
    entry.delta_f1_points =
        100.0 * (entry.summary.avg_f1 - result.baseline.avg_f1);
    result.per_group.push_back(std::move(entry));
  }
  return result;
}

AblationResult RunAblation(const Corpus& corpus, const LexiconSet& lexicons,
                           std::string_view class_id,
                           const StudyParams& params) {
  const LabeledTask task = Binarize(corpus, class_id);
  EncodeOptions options;
  options.jobs = params.jobs;
  const FeatureMatrix full = Encode(corpus, lexicons, kAllGroups, options);
  return RunAblation(full, task, params);
}

std::string_view ProtocolName(SelectionProtocol protocol) {
  return protocol == SelectionProtocol::kGlobal ? "global" : "per_fold";
}

std::string_view Chi2VariantName(Chi2Variant variant) {
  return variant == Chi2Variant::kObservedExpected ? "observed_expected"
                                                   : "contingency";
}

std::vector<int> DefaultGrid() {
  std::vector<int> grid = {1};
  for (int p = 5; p <= 100; p += 5) grid.push_back(p);
  return grid;
}

void ValidateGrid(std::span<const int> grid) {
  if (grid.empty()) {
    throw Error(ErrorCode::kConfig, "percentile grid is empty");
  }
  int prev = 0;
  for (int p : grid) {
    if (p < 1 || p > 100 || p <= prev) {
      throw Error(ErrorCode::kConfig,
                  "percentile grid must be strictly ascending within "
                  "[1, 100]");
    }
    prev = p;
  }
}

Peak FirstPeak(std::span<const CurvePoint> points) {
  if (points.empty()) {
    throw Error(ErrorCode::kConfig, "cannot take the peak of an empty curve");
  }
  const CurvePoint* best = &points.front();
  for (const auto& p : points) {
    if (p.summary.avg_f1 > best->summary.avg_f1) best = &p;
  }
  return {best->percentile, best->k, best->summary.avg_f1};
}

EliminationCurve RunElimination(const FeatureMatrix& full,
                                const LabeledTask& task,
                                const StudyParams& params,
                                const EliminationParams& elimination) {
  ValidateGrid(elimination.grid);
  EliminationCurve curve;
  curve.class_id = task.class_id;
  curve.total_features = full.cols();
  curve.protocol = elimination.protocol;
  curve.chi2 = elimination.chi2;
  curve.grid = elimination.grid;

  const FeatureMatrix reduced = ReduceMinDf(full, elimination.min_df);
  curve.reduced_features = reduced.cols();

  FoldPlan plan;
  try {
    plan = StratifiedFolds(task.labels, params.folds, params.seed);
  } catch (const Error& e) {
    throw e.WithContext(Context(task.class_id, "fold plan"));
  }
  curve.fold_plan_hash = plan.Hash();

  std::optional<Chi2Scores> global_scores;
  if (elimination.protocol == SelectionProtocol::kGlobal) {
    global_scores = ComputeChi2(reduced, task.labels, elimination.chi2);
  }

  const std::size_t n = elimination.grid.size();
  std::vector<std::optional<CurvePoint>> slots(n);
  ParallelFor(n, params.jobs, [&](std::size_t i) {
    const int percentile = elimination.grid[i];
    const std::size_t k = PercentileCount(percentile, reduced.cols());
    if (k == 0) return;
    const std::string what = "percentile " + std::to_string(percentile);
    CurvePoint point;
    point.percentile = percentile;
    point.k = k;
    try {
      if (global_scores) {
        const auto selection = SelectPercentile(*global_scores, percentile);
        point.summary =
            CrossValidate(reduced.SelectColumns(selection.kept_columns),
                          task.labels, params.train, plan);
      } else {
        CvOptions options;
        const Chi2Variant variant = elimination.chi2;
        options.selector = [percentile, variant](
                               const FeatureMatrix& train,
                               std::span<const std::uint8_t> labels) {
          return SelectPercentile(ComputeChi2(train, labels, variant),
                                  percentile)
              .kept_columns;
        };
        point.summary = CrossValidate(reduced, task.labels, params.train,
                                      plan, options);
      }
    } catch (const Error& e) {
      throw e.WithContext(Context(task.class_id, what));
    }
    slots[i] = std::move(point);
  });

  for (std::size_t i = 0; i < n; ++i) {
    if (slots[i]) {
      curve.points.push_back(std::move(*slots[i]));
    } else {
      curve.skipped.push_back(elimination.grid[i]);
    }
  }
  if (curve.points.empty()) {
    throw Error(ErrorCode::kEmptySelection,
                Context(task.class_id,
                        "every grid percentile selects zero of " +
                            std::to_string(reduced.cols()) + " features"));
  }
  curve.peak = FirstPeak(curve.points);
  return curve;
}

EliminationCurve RunElimination(const Corpus& corpus,
                                const LexiconSet& lexicons,
                                std::string_view class_id,
                                const StudyParams& params,
                                const EliminationParams& elimination) {
  const LabeledTask task = Binarize(corpus, class_id);
  EncodeOptions options;
  options.jobs = params.jobs;
  const FeatureMatrix full = Encode(corpus, lexicons, kAllGroups, options);
  return RunElimination(full, task, params, elimination);
}

}  // namespace featstudy
