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

#include "featstudy/corpus.h"

#include <fstream>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "featstudy/error.h"
#include "featstudy/hash.h"
#include "json.hpp"

namespace featstudy {

using nlohmann::json;

ClassSchema::ClassSchema(std::vector<ClassDef> classes)
    : classes_(std::move(classes)) {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const auto& def = classes_[i];
    if (def.id.empty()) {
      throw Error(ErrorCode::kSchema, "class id must be non-empty");
    }
    if (!index_.emplace(def.id, i).second) {
      throw Error(ErrorCode::kSchema, "duplicate class id '" + def.id + "'");
    }
  }
  for (const auto& def : classes_) {
    if (def.parent && !index_.count(*def.parent)) {
      throw Error(ErrorCode::kSchema, "class '" + def.id +
                                          "' has unknown parent '" +
                                          *def.parent + "'");
    }
  }
  // Walking up from any node must terminate within size() steps.
  for (const auto& def : classes_) {
    const ClassDef* node = &def;
    std::size_t steps = 0;
    while (node->parent) {
      node = &classes_[index_.at(*node->parent)];
      if (++steps > classes_.size()) {
        throw Error(ErrorCode::kSchema,
                    "class hierarchy has a cycle through '" + def.id + "'");
      }
    }
  }
}

ClassSchema ClassSchema::FromJson(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("schema: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("classes") ||
      !doc["classes"].is_array()) {
    throw Error(ErrorCode::kParse, "schema: expected {\"classes\": [...]}");
  }
  std::vector<ClassDef> classes;
  for (const auto& entry : doc["classes"]) {
    if (!entry.is_object() || !entry.contains("id") ||
        !entry["id"].is_string()) {
      throw Error(ErrorCode::kParse, "schema: class entry needs a string id");
    }
    ClassDef def;
    def.id = entry["id"].get<std::string>();
    if (entry.contains("parent") && !entry["parent"].is_null()) {
      if (!entry["parent"].is_string()) {
        throw Error(ErrorCode::kParse,
                    "schema: parent of '" + def.id + "' must be string|null");
      }
      def.parent = entry["parent"].get<std::string>();
    }
    classes.push_back(std::move(def));
  }
  return ClassSchema(std::move(classes));
}

ClassSchema ClassSchema::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kConfig,
                "cannot open schema file '" + path.string() + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FromJson(buffer.str());
}

bool ClassSchema::Contains(std::string_view id) const {
  return index_.count(std::string(id)) > 0;
}

bool ClassSchema::IsRoot(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it != index_.end() && !classes_[it->second].parent;
}

std::vector<std::string> ClassSchema::Ancestors(std::string_view id) const {
  std::vector<std::string> out;
  auto it = index_.find(std::string(id));
  if (it == index_.end()) {
    throw Error(ErrorCode::kSchema, "unknown class '" + std::string(id) + "'");
  }
  const ClassDef* node = &classes_[it->second];
  while (node->parent) {
    out.push_back(*node->parent);
    node = &classes_[index_.at(*node->parent)];
  }
  return out;
}

std::vector<std::string> ClassSchema::Children(std::string_view id) const {
  std::vector<std::string> out;
  for (const auto& def : classes_) {
    if (def.parent && *def.parent == id) out.push_back(def.id);
  }
  return out;
}

Corpus::Corpus(ClassSchema schema, std::vector<Document> documents,
               LoadOptions options)
    : schema_(std::move(schema)), documents_(std::move(documents)) {
  std::unordered_set<std::string> seen;
  for (auto& doc : documents_) {
    if (doc.id.empty()) {
      throw Error(ErrorCode::kSchema, "document id must be non-empty");
    }
    if (!seen.insert(doc.id).second) {
      throw Error(ErrorCode::kSchema, "duplicate document id '" + doc.id + "'");
    }
    std::set<std::string> closed = doc.labels;
    for (const auto& label : doc.labels) {
      if (!schema_.Contains(label)) {
        throw Error(ErrorCode::kSchema, "document '" + doc.id +
                                            "' has unknown label '" + label +
                                            "'");
      }
      for (const auto& ancestor : schema_.Ancestors(label)) {
        if (options.strict && !doc.labels.count(ancestor)) {
          throw Error(ErrorCode::kSchema,
                      "document '" + doc.id + "' has label '" + label +
                          "' without its ancestor '" + ancestor + "'");
        }
        closed.insert(ancestor);
      }
    }
    doc.labels = std::move(closed);
    for (const auto& label : doc.labels) {
      if (schema_.IsRoot(label)) ++annotation_count_;
    }
  }
}

std::size_t Corpus::label_count() const {
  std::size_t total = 0;
  for (const auto& doc : documents_) total += doc.labels.size();
  return total;
}

std::string Corpus::Hash() const {
  Fingerprint fp;
  for (const auto& doc : documents_) {
    fp.Add(doc.id).Separator().Add(doc.text).Separator();
    for (const auto& label : doc.labels) fp.Add(label).Separator();
    fp.Separator();
  }
  return fp.Hex();
}

Corpus ParseCorpus(std::string_view jsonl, const ClassSchema& schema,
                   LoadOptions options) {
  std::vector<Document> documents;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= jsonl.size()) {
    std::size_t end = jsonl.find('\n', start);
    if (end == std::string_view::npos) end = jsonl.size();
    std::string_view line = jsonl.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      if (end == jsonl.size()) break;
      continue;
    }
    const std::string where = "line " + std::to_string(line_no);
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kParse, where + ": " + e.what());
    }
    if (!obj.is_object() || !obj.contains("id") || !obj["id"].is_string() ||
        !obj.contains("text") || !obj["text"].is_string() ||
        !obj.contains("labels") || !obj["labels"].is_array()) {
      throw Error(ErrorCode::kParse,
                  where + ": expected {\"id\": string, \"text\": string, "
                          "\"labels\": [string, ...]}");
    }
    Document doc;
    doc.id = obj["id"].get<std::string>();
    doc.text = obj["text"].get<std::string>();
    for (const auto& label : obj["labels"]) {
      if (!label.is_string()) {
        throw Error(ErrorCode::kParse, where + ": labels must be strings");
      }
      doc.labels.insert(label.get<std::string>());
    }
    documents.push_back(std::move(doc));
    if (end == jsonl.size()) break;
  }
  return Corpus(schema, std::move(documents), options);
}

Corpus LoadCorpus(const std::filesystem::path& path, const ClassSchema& schema,
                  LoadOptions options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kConfig,
                "cannot open corpus file '" + path.string() + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseCorpus(buffer.str(), schema, options);
  } catch (const Error& e) {
    throw e.WithContext(path.string());
  }
}

LabeledTask Binarize(const Corpus& corpus, std::string_view class_id) {
  if (!corpus.schema().Contains(class_id)) {
    throw Error(ErrorCode::kConfig,
                "unknown class '" + std::string(class_id) + "'");
  }
  LabeledTask task;
  task.class_id = std::string(class_id);
  task.labels.reserve(corpus.size());
  const std::string key(class_id);
  for (const auto& doc : corpus.documents()) {
    const bool positive = doc.labels.count(key) > 0;
    task.labels.push_back(positive ? 1 : 0);
    task.positive_count += positive ? 1 : 0;
  }
  return task;
}

}  // namespace featstudy
