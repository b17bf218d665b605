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

#ifndef FEATSTUDY_CORPUS_H_
#define FEATSTUDY_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace featstudy {

struct ClassDef {
  std::string id;
  std::optional<std::string> parent;
};

// A forest of class ids. Root classes have no parent.
class ClassSchema {
 public:
  ClassSchema() = default;

  // Validates uniqueness, parent resolution and acyclicity. Throws
  // Error(kSchema) on violation.
  explicit ClassSchema(std::vector<ClassDef> classes);

  // Parses {"classes": [{"id": ..., "parent": ...|null}, ...]}.
  static ClassSchema FromJson(std::string_view json_text);
  static ClassSchema Load(const std::filesystem::path& path);

  const std::vector<ClassDef>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  bool Contains(std::string_view id) const;
  bool IsRoot(std::string_view id) const;

  // Strict ancestors of `id`, nearest first. `id` must exist.
  std::vector<std::string> Ancestors(std::string_view id) const;
  // Direct children in declaration order.
  std::vector<std::string> Children(std::string_view id) const;

 private:
  std::vector<ClassDef> classes_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct Document {
  std::string id;
  std::string text;
  std::set<std::string> labels;
};

struct LoadOptions {
  // When set, a label whose ancestors are missing is a schema violation
  // instead of being completed automatically.
  bool strict = false;
};

// Validated, immutable collection of documents. One row per document;
// multi-label documents appear once with their full (ancestor-closed) label
// set.
class Corpus {
 public:
  // Validates ids and labels against `schema` and applies ancestor closure.
  Corpus(ClassSchema schema, std::vector<Document> documents,
         LoadOptions options = {});

  const ClassSchema& schema() const { return schema_; }
  const std::vector<Document>& documents() const { return documents_; }
  std::size_t size() const { return documents_.size(); }

  // Number of root-level annotations after closure. A document annotated
  // under two root classes counts twice, so this can exceed size().
  std::size_t annotation_count() const { return annotation_count_; }
  // Total labels over all documents after closure.
  std::size_t label_count() const;

  // Stable content fingerprint over ids, texts and labels.
  std::string Hash() const;

 private:
  ClassSchema schema_;
  std::vector<Document> documents_;
  std::size_t annotation_count_ = 0;
};

// Reads the JSON-lines corpus format:
//   {"id": string, "text": string, "labels": [string, ...]}
// Blank lines are skipped. Parse errors report the 1-based line number.
Corpus LoadCorpus(const std::filesystem::path& path, const ClassSchema& schema,
                  LoadOptions options = {});
Corpus ParseCorpus(std::string_view jsonl, const ClassSchema& schema,
                   LoadOptions options = {});

// One-vs-rest task for a single class over the corpus rows.
struct LabeledTask {
  std::string class_id;
  std::vector<std::uint8_t> labels;
  std::size_t positive_count = 0;
};

LabeledTask Binarize(const Corpus& corpus, std::string_view class_id);

}  // namespace featstudy

#endif  // FEATSTUDY_CORPUS_H_
