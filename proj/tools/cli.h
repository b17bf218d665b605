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

#ifndef FEATSTUDY_TOOLS_CLI_H_
#define FEATSTUDY_TOOLS_CLI_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "featstudy/feature_matrix.h"

namespace featstudy::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitConfig = 2;

struct RunConfig {
  std::string command;
  std::filesystem::path corpus;
  std::filesystem::path schema;
  std::filesystem::path lexicons;
  std::filesystem::path out = "featstudy_out";
  std::filesystem::path input;  // `report` only
  std::vector<std::string> classes;  // "all" expands to every schema class
  std::vector<FeatureGroup> groups = {kAllGroups.begin(), kAllGroups.end()};
  std::uint64_t seed = 0;
  int folds = 5;
  double c = 1.0;
  double tolerance = 0.1;
  int max_passes = 1000;
  std::size_t min_df = 2;
  std::vector<int> grid;  // empty: default grid
  std::size_t jobs = 0;   // 0: available parallelism
  bool strict_schema = false;
  bool per_fold_selection = false;
  bool contingency_chi2 = false;
};

// Entry point shared by the executable and the tests. Messages go to `out`,
// diagnostics to `err`.
int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

// Individual subcommands. They throw featstudy::Error on failure.
void CmdFeaturize(const RunConfig& config, std::ostream& out);
void CmdCv(const RunConfig& config, std::ostream& out, std::ostream& err);
void CmdAblate(const RunConfig& config, std::ostream& out, std::ostream& err);
void CmdEliminate(const RunConfig& config, std::ostream& out,
                  std::ostream& err);
void CmdReport(const RunConfig& config, std::ostream& out);

// File-name-safe form of a class id.
std::string FileStem(const std::string& class_id);

}  // namespace featstudy::cli

#endif  // FEATSTUDY_TOOLS_CLI_H_
