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

#ifndef FEATSTUDY_FEATURE_MATRIX_H_
#define FEATSTUDY_FEATURE_MATRIX_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace featstudy {

// Declaration order is the column order of an encoded matrix.
enum class FeatureGroup : std::uint8_t {
  kLexical,
  kSyntactic,
  kEmotion,
  kDemographic,
  kSentiment,
  kPersonality,
  kLiwc,
};

inline constexpr std::array<FeatureGroup, 7> kAllGroups = {
    FeatureGroup::kLexical,     FeatureGroup::kSyntactic,
    FeatureGroup::kEmotion,     FeatureGroup::kDemographic,
    FeatureGroup::kSentiment,   FeatureGroup::kPersonality,
    FeatureGroup::kLiwc,
};

// "lexical", "syntactic", "emotion", "demographic", "sentiment",
// "personality", "liwc".
std::string_view GroupName(FeatureGroup group);
std::optional<FeatureGroup> ParseGroup(std::string_view name);

struct FeatureDescriptor {
  int column = 0;
  FeatureGroup group = FeatureGroup::kLexical;
  std::string name;  // e.g. "unigram=depressed", "emoticon=SAD"

  bool operator==(const FeatureDescriptor&) const = default;
};

using FeatureRegistry = std::vector<FeatureDescriptor>;

// Column count per group. All seven groups are present, possibly with 0.
std::map<FeatureGroup, std::size_t> GroupSizes(const FeatureRegistry& registry);

// Order-sensitive fingerprint of (group, name) pairs.
std::string RegistryHash(const FeatureRegistry& registry);

// Row-compressed binary matrix. Every stored entry is 1; each row holds its
// present column indices in strictly increasing order.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;

  // Validates the CSR layout against the registry. Column indices in the
  // registry are rewritten to 0..n-1.
  FeatureMatrix(FeatureRegistry registry, std::vector<std::size_t> row_offsets,
                std::vector<std::int32_t> indices);

  // Builds from per-row column lists (each must already be strictly sorted).
  static FeatureMatrix FromRows(
      FeatureRegistry registry,
      const std::vector<std::vector<std::int32_t>>& rows);

  std::size_t rows() const { return row_offsets_.size() - 1; }
  std::size_t cols() const { return registry_.size(); }
  std::size_t nnz() const { return indices_.size(); }
  const FeatureRegistry& registry() const { return registry_; }

  std::span<const std::size_t> row_offsets() const { return row_offsets_; }
  std::span<const std::int32_t> indices() const { return indices_; }

  std::span<const std::int32_t> Row(std::size_t r) const {
    return {indices_.data() + row_offsets_[r],
            row_offsets_[r + 1] - row_offsets_[r]};
  }

  // Rows containing each column.
  std::vector<std::size_t> DocumentFrequency() const;

  // Keeps `columns` (strictly increasing original indices) and renumbers
  // them 0..n-1, preserving order.
  FeatureMatrix SelectColumns(std::span<const std::int32_t> columns) const;

  // Keeps the given rows in the given order.
  FeatureMatrix SelectRows(std::span<const std::size_t> rows) const;

  bool operator==(const FeatureMatrix&) const = default;

 private:
  FeatureRegistry registry_;
  std::vector<std::size_t> row_offsets_ = {0};
  std::vector<std::int32_t> indices_;
};

// Drops every column of `group`; row count and remaining order unchanged.
FeatureMatrix Ablate(const FeatureMatrix& matrix, FeatureGroup group);

}  // namespace featstudy

#endif  // FEATSTUDY_FEATURE_MATRIX_H_
