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

#include "featstudy/feature_matrix.h"

#include <utility>

#include "featstudy/error.h"
#include "featstudy/hash.h"

namespace featstudy {

std::string_view GroupName(FeatureGroup group) {
  switch (group) {
    case FeatureGroup::kLexical:
      return "lexical";
    case FeatureGroup::kSyntactic:
      return "syntactic";
    case FeatureGroup::kEmotion:
      return "emotion";
    case FeatureGroup::kDemographic:
      return "demographic";
    case FeatureGroup::kSentiment:
      return "sentiment";
    case FeatureGroup::kPersonality:
      return "personality";
    case FeatureGroup::kLiwc:
      return "liwc";
  }
  return "unknown";
}

std::optional<FeatureGroup> ParseGroup(std::string_view name) {
  for (FeatureGroup g : kAllGroups) {
    if (GroupName(g) == name) return g;
  }
  return std::nullopt;
}

std::map<FeatureGroup, std::size_t> GroupSizes(
    const FeatureRegistry& registry) {
  std::map<FeatureGroup, std::size_t> sizes;
  for (FeatureGroup g : kAllGroups) sizes[g] = 0;
  for (const auto& d : registry) ++sizes[d.group];
  return sizes;
}

std::string RegistryHash(const FeatureRegistry& registry) {
  Fingerprint fp;
  for (const auto& d : registry) {
    fp.Add(GroupName(d.group)).Separator().Add(d.name).Separator();
  }
  return fp.Hex();
}

FeatureMatrix::FeatureMatrix(FeatureRegistry registry,
                             std::vector<std::size_t> row_offsets,
                             std::vector<std::int32_t> indices)
    : registry_(std::move(registry)),
      row_offsets_(std::move(row_offsets)),
      indices_(std::move(indices)) {
  if (row_offsets_.empty() || row_offsets_.front() != 0 ||
      row_offsets_.back() != indices_.size()) {
    throw Error(ErrorCode::kDimension, "malformed row offsets");
  }
  for (std::size_t i = 0; i < registry_.size(); ++i) {
    registry_[i].column = static_cast<int>(i);
  }
  const auto ncols = static_cast<std::int32_t>(registry_.size());
  for (std::size_t r = 0; r + 1 < row_offsets_.size(); ++r) {
    if (row_offsets_[r] > row_offsets_[r + 1]) {
      throw Error(ErrorCode::kDimension, "row offsets must be non-decreasing");
    }
    std::int32_t prev = -1;
    for (std::size_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) {
      const std::int32_t c = indices_[k];
      if (c <= prev || c >= ncols) {
        throw Error(ErrorCode::kDimension,
                    "row " + std::to_string(r) +
                        " has unsorted or out-of-range column " +
                        std::to_string(c));
      }
      prev = c;
    }
  }
}

FeatureMatrix FeatureMatrix::FromRows(
    FeatureRegistry registry,
    const std::vector<std::vector<std::int32_t>>& rows) {
  std::vector<std::size_t> offsets;
  offsets.reserve(rows.size() + 1);
  offsets.push_back(0);
  std::vector<std::int32_t> indices;
  for (const auto& row : rows) {
    indices.insert(indices.end(), row.begin(), row.end());
    offsets.push_back(indices.size());
  }
  return FeatureMatrix(std::move(registry), std::move(offsets),
                       std::move(indices));
}

std::vector<std::size_t> FeatureMatrix::DocumentFrequency() const {
  std::vector<std::size_t> df(cols(), 0);
  for (std::int32_t c : indices_) ++df[static_cast<std::size_t>(c)];
  return df;
}

FeatureMatrix FeatureMatrix::SelectColumns(
    std::span<const std::int32_t> columns) const {
  std::vector<std::int32_t> remap(cols(), -1);
  FeatureRegistry registry;
  registry.reserve(columns.size());
  std::int32_t prev = -1;
  for (std::int32_t c : columns) {
    if (c <= prev || c >= static_cast<std::int32_t>(cols())) {
      throw Error(ErrorCode::kDimension,
                  "selected columns must be strictly increasing and in range");
    }
    prev = c;
    remap[static_cast<std::size_t>(c)] =
        static_cast<std::int32_t>(registry.size());
    registry.push_back(registry_[static_cast<std::size_t>(c)]);
  }
  std::vector<std::size_t> offsets;
  offsets.reserve(row_offsets_.size());
  offsets.push_back(0);
  std::vector<std::int32_t> indices;
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::int32_t c : Row(r)) {
      const std::int32_t m = remap[static_cast<std::size_t>(c)];
      if (m >= 0) indices.push_back(m);
    }
    offsets.push_back(indices.size());
  }
  return FeatureMatrix(std::move(registry), std::move(offsets),
                       std::move(indices));
}

FeatureMatrix FeatureMatrix::SelectRows(
    std::span<const std::size_t> rows) const {
  std::vector<std::size_t> offsets;
  offsets.reserve(rows.size() + 1);
  offsets.push_back(0);
  std::vector<std::int32_t> indices;
  for (std::size_t r : rows) {
    if (r >= this->rows()) {
      throw Error(ErrorCode::kDimension, "row index out of range");
    }
    auto row = Row(r);
    indices.insert(indices.end(), row.begin(), row.end());
    offsets.push_back(indices.size());
  }
  return FeatureMatrix(registry_, std::move(offsets), std::move(indices));
}

FeatureMatrix Ablate(const FeatureMatrix& matrix, FeatureGroup group) {
  std::vector<std::int32_t> keep;
  keep.reserve(matrix.cols());
  for (const auto& d : matrix.registry()) {
    if (d.group != group) keep.push_back(d.column);
  }
  return matrix.SelectColumns(keep);
}

}  // namespace featstudy
