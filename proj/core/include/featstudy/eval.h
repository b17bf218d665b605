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

#ifndef FEATSTUDY_EVAL_H_
#define FEATSTUDY_EVAL_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "featstudy/feature_matrix.h"
#include "featstudy/svm.h"

namespace featstudy {

struct FoldPlan {
  int k = 0;
  std::vector<int> assignments;  // fold index per row
  std::uint64_t seed = 0;

  std::vector<std::size_t> TestRows(int fold) const;
  std::vector<std::size_t> TrainRows(int fold) const;
  // Fingerprint of k and the assignments; equal plans hash equal.
  std::string Hash() const;
};

// Shuffles the row indices of each class with `seed` (negatives first, then
// positives) and deals them round-robin, the positives continuing where the
// negatives stopped. Per-fold class counts and fold sizes then differ by at
// most one.
//
// Throws Error(kConfig) for k < 2 and Error(kStratification) when a class
// has fewer than k rows.
FoldPlan StratifiedFolds(std::span<const std::uint8_t> labels, int k,
                         std::uint64_t seed);

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Positive-class precision, recall and F1; every 0/0 is taken as 0.
Prf ComputePrf(std::size_t tp, std::size_t fp, std::size_t fn);

struct FoldMetrics {
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
  double precision = 0.0, recall = 0.0, f1 = 0.0;

  bool operator==(const FoldMetrics&) const = default;
};

struct MetricSummary {
  std::vector<FoldMetrics> per_fold;
  // Unweighted means over folds.
  double avg_precision = 0.0;
  double avg_recall = 0.0;
  double avg_f1 = 0.0;

  bool operator==(const MetricSummary&) const = default;
};

// Fills P/R/F1 of each fold from its counts and averages them.
MetricSummary Summarize(std::vector<FoldMetrics> per_fold);

// Chooses the (ascending) columns a fold trains and tests on, given that
// fold's training rows only.
using FoldColumnSelector = std::function<std::vector<std::int32_t>(
    const FeatureMatrix& train, std::span<const std::uint8_t> train_labels)>;

struct CvOptions {
  std::size_t jobs = 1;  // folds evaluated concurrently; 0 = all cores
  FoldColumnSelector selector;  // empty: use every column
};

// Trains on the rows outside each fold and scores the rows inside it.
MetricSummary CrossValidate(const FeatureMatrix& matrix,
                            std::span<const std::uint8_t> labels,
                            const TrainParams& params, const FoldPlan& plan,
                            const CvOptions& options = {});

}  // namespace featstudy

#endif  // FEATSTUDY_EVAL_H_
