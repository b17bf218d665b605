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

#ifndef FEATSTUDY_TESTS_TESTING_ORACLES_H_
#define FEATSTUDY_TESTS_TESTING_ORACLES_H_

// Independent reference computations and synthetic corpora for tests. Nothing
// here calls the library code paths it is used to check.

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "featstudy/corpus.h"
#include "featstudy/feature_matrix.h"
#include "featstudy/lexicon.h"

namespace featstudy::testing {

using DenseBinary = std::vector<std::vector<int>>;

// Wraps a dense 0/1 matrix; columns are lexical features "f0", "f1", ...
FeatureMatrix MatrixFromDense(const DenseBinary& dense, std::size_t cols);

DenseBinary RandomBinary(std::size_t rows, std::size_t cols, double density,
                         std::mt19937_64& rng);

// Observed-vs-expected chi-square by direct loops over rows, one column at a
// time.
std::vector<double> BruteForceChi2(const DenseBinary& x,
                                   const std::vector<int>& y);

// Maximum of the bias-augmented SVM dual
//   D(a) = sum a_i - 1/2 sum_ij a_i a_j y_i y_j (x_i.x_j + 1)
// over the grid {0, h, 2h, ..., c}^4 with h = step_fraction * c.
double DualGridMaximum(const std::array<std::array<double, 2>, 4>& points,
                       const std::array<int, 4>& labels, double c,
                       double step_fraction);

struct PlantedCorpusOptions {
  std::size_t documents = 500;
  std::size_t noise_vocabulary = 2000;
  std::size_t signal_vocabulary = 10;
  // Probability that a given signal token appears in a positive document.
  // Negative documents never carry signal tokens.
  double signal_rate = 0.95;
  double positive_fraction = 0.3;
  std::size_t noise_tokens_per_document = 12;
  std::uint64_t seed = 20170206;
};

// A corpus in which only the lexical signal tokens predict the class
// "planted". Every non-lexical group is fed by label-independent noise.
struct PlantedCorpus {
  std::string schema_json;
  std::string corpus_jsonl;
  std::map<std::string, std::string> lexicon_files;  // file name -> TSV
  std::vector<std::string> signal_tokens;
  ClassSchema schema;
  Corpus corpus;
  LexiconSet lexicons;
};

inline constexpr const char* kPlantedClass = "planted";

PlantedCorpus MakePlantedCorpus(const PlantedCorpusOptions& options = {});

// Writes schema.json, corpus.jsonl and lexicons/*.tsv under `dir`.
void WritePlantedCorpus(const PlantedCorpus& planted,
                        const std::filesystem::path& dir);

// Bundled demo data directory.
std::filesystem::path DemoDir();

// Fresh empty directory under the system temp dir.
std::filesystem::path MakeTempDir(const std::string& name);

std::string ReadFile(const std::filesystem::path& path);

}  // namespace featstudy::testing

#endif  // FEATSTUDY_TESTS_TESTING_ORACLES_H_
