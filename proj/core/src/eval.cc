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

#include "featstudy/eval.h"

#include <random>

#include "featstudy/error.h"
#include "featstudy/hash.h"
#include "featstudy/parallel.h"
#include "featstudy/random.h"

namespace featstudy {

std::vector<std::size_t> FoldPlan::TestRows(int fold) const {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] == fold) rows.push_back(i);
  }
  return rows;
}

std::vector<std::size_t> FoldPlan::TrainRows(int fold) const {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] != fold) rows.push_back(i);
  }
  return rows;
}

std::string FoldPlan::Hash() const {
  Fingerprint fp;
  fp.Add(static_cast<std::uint64_t>(k));
  for (int a : assignments) fp.Add(static_cast<std::uint64_t>(a));
  return fp.Hex();
}

FoldPlan StratifiedFolds(std::span<const std::uint8_t> labels, int k,
                         std::uint64_t seed) {
  if (k < 2) {
    throw Error(ErrorCode::kConfig, "number of folds must be at least 2");
  }
  std::vector<std::size_t> by_class[2];
  for (std::size_t i = 0; i < labels.size(); ++i) {
    by_class[labels[i] ? 1 : 0].push_back(i);
  }
  static constexpr const char* kClassName[2] = {"negative", "positive"};
  for (int c = 0; c < 2; ++c) {
    if (by_class[c].size() < static_cast<std::size_t>(k)) {
      throw Error(ErrorCode::kStratification,
                  std::string(kClassName[c]) + " class has " +
                      std::to_string(by_class[c].size()) +
                      " rows, fewer than the " + std::to_string(k) +
                      " folds");
    }
  }
  FoldPlan plan;
  plan.k = k;
  plan.seed = seed;
  plan.assignments.assign(labels.size(), 0);
  std::mt19937_64 rng(seed);
  std::size_t dealt = 0;
  for (auto& members : by_class) {
    SeededShuffle(std::span<std::size_t>(members), rng);
    for (std::size_t row : members) {
      plan.assignments[row] = static_cast<int>(dealt++ % k);
    }
  }
  return plan;
}

Prf ComputePrf(std::size_t tp, std::size_t fp, std::size_t fn) {
  Prf out;
  if (tp + fp > 0) out.precision = static_cast<double>(tp) / (tp + fp);
  if (tp + fn > 0) out.recall = static_cast<double>(tp) / (tp + fn);
  if (out.precision + out.recall > 0.0) {
    out.f1 = 2.0 * out.precision * out.recall / (out.precision + out.recall);
  }
  return out;
}

MetricSummary Summarize(std::vector<FoldMetrics> per_fold) {
  MetricSummary summary;
  for (auto& f : per_fold) {
    const Prf prf = ComputePrf(f.tp, f.fp, f.fn);
    f.precision = prf.precision;
    f.recall = prf.recall;
    f.f1 = prf.f1;
    summary.avg_precision += f.precision;
    summary.avg_recall += f.recall;
    summary.avg_f1 += f.f1;
  }
  if (!per_fold.empty()) {
    const double n = static_cast<double>(per_fold.size());
    summary.avg_precision /= n;
    summary.avg_recall /= n;
    summary.avg_f1 /= n;
  }
  summary.per_fold = std::move(per_fold);
  return summary;
}

MetricSummary CrossValidate(const FeatureMatrix& matrix,
                            std::span<const std::uint8_t> labels,
                            const TrainParams& params, const FoldPlan& plan,
                            const CvOptions& options) {
  if (matrix.rows() != labels.size() ||
      plan.assignments.size() != labels.size()) {
    throw Error(ErrorCode::kDimension,
                "matrix rows, labels and fold plan must have equal length");
  }
  std::vector<FoldMetrics> per_fold(static_cast<std::size_t>(plan.k));
  ParallelFor(per_fold.size(), options.jobs, [&](std::size_t f) {
    const auto train_rows = plan.TrainRows(static_cast<int>(f));
    const auto test_rows = plan.TestRows(static_cast<int>(f));
    std::vector<std::uint8_t> train_labels;
    train_labels.reserve(train_rows.size());
    for (std::size_t r : train_rows) train_labels.push_back(labels[r]);

    FeatureMatrix train = matrix.SelectRows(train_rows);
    FeatureMatrix test = matrix.SelectRows(test_rows);
    if (options.selector) {
      const auto columns = options.selector(train, train_labels);
      train = train.SelectColumns(columns);
      test = test.SelectColumns(columns);
    }
    const LinearModel model = Train(train, train_labels, params);
    FoldMetrics& m = per_fold[f];
    for (std::size_t i = 0; i < test_rows.size(); ++i) {
      const bool predicted = Predict(model, test.Row(i)) == 1;
      const bool actual = labels[test_rows[i]] != 0;
      if (predicted && actual) {
        ++m.tp;
      } else if (predicted) {
        ++m.fp;
      } else if (actual) {
        ++m.fn;
      } else {
        ++m.tn;
      }
    }
  });
  return Summarize(std::move(per_fold));
}

}  // namespace featstudy
