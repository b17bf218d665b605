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

#ifndef FEATSTUDY_REPORT_H_
#define FEATSTUDY_REPORT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "featstudy/studies.h"
#include "featstudy/svm.h"

namespace featstudy {

struct ReportMetadata {
  std::string corpus_hash;
  std::string registry_hash;
  std::uint64_t seed = 0;
  int folds = 5;
  TrainParams params;
  std::size_t min_df = 0;  // elimination only
  std::vector<int> grid;   // elimination only
};

struct StudyReport {
  ReportMetadata metadata;
  std::variant<AblationResult, EliminationCurve> payload;

  bool is_ablation() const { return payload.index() == 0; }
};

// "%.6f", with negative zero printed as "0.000000". Throws Error(kIo) for
// non-finite values, which JSON cannot carry.
std::string FormatFixed6(double value);

// Canonical JSON: sorted keys, two-space indentation, every real printed with
// six decimals, trailing newline. Equal reports give byte-identical text.
std::string ToCanonicalJson(const StudyReport& report);

// Re-emits arbitrary JSON text in the same canonical layout.
std::string CanonicalizeJson(std::string_view json_text);

// Inverse of ToCanonicalJson. Reals come back rounded to six decimals.
// Throws Error(kParse) for malformed input.
StudyReport ParseStudyReport(std::string_view json_text);

// CSV with a header row, comma separated, string fields quoted.
//   ablation:    class,group,features_without_group,avg_p,avg_r,avg_f1,
//                delta_points
//   elimination: class,percentile,k,avg_p,avg_r,avg_f1,is_peak
//   peaks:       class,percentile,k,avg_f1
std::string AblationCsv(const AblationResult& result);
std::string EliminationCsv(const EliminationCurve& curve);
std::string PeaksCsv(std::span<const EliminationCurve> curves);

// Bar chart of F1-point deltas per held-out group. Gains are drawn in
// kGainColor, losses in kLossColor; the title carries the baseline F1.
inline constexpr std::string_view kGainColor = "#000000";
inline constexpr std::string_view kLossColor = "#800080";
std::string AblationChartSvg(const AblationResult& result);

// Average F1 against percentile. Two or more points are joined by a
// polyline; the first peak is marked by a circle with id="peak".
std::string CurveChartSvg(const EliminationCurve& curve);

// Writes through a temporary sibling file and renames it into place.
// Throws Error(kIo) on failure.
void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view content);

void EmitJson(const StudyReport& report, const std::filesystem::path& path);
void EmitAblationChart(const AblationResult& result,
                       const std::filesystem::path& path);
void EmitCurveChart(const EliminationCurve& curve,
                    const std::filesystem::path& path);

}  // namespace featstudy

#endif  // FEATSTUDY_REPORT_H_
