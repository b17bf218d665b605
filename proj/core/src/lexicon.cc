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

#include "featstudy/lexicon.h"

#include <fstream>
#include <sstream>

#include "featstudy/error.h"
#include "featstudy/tokenizer.h"

namespace featstudy {
namespace {

// Calls fn(fields, line_no) for every non-comment, non-blank line.
template <typename Fn>
void ForEachRecord(std::string_view tsv, Fn&& fn) {
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start < tsv.size()) {
    std::size_t end = tsv.find('\n', start);
    if (end == std::string_view::npos) end = tsv.size();
    std::string_view line = tsv.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    std::vector<std::string> fields;
    std::size_t f = 0;
    while (true) {
      std::size_t tab = line.find('\t', f);
      fields.emplace_back(line.substr(f, tab == std::string_view::npos
                                             ? std::string_view::npos
                                             : tab - f));
      if (tab == std::string_view::npos) break;
      f = tab + 1;
    }
    fn(fields, line_no);
  }
}

Error FieldError(std::string_view source, std::size_t line_no,
                 const std::string& what) {
  return Error(ErrorCode::kParse, std::string(source) + ":" +
                                      std::to_string(line_no) + ": " + what);
}

Strength ParseStrength(const std::string& s, std::string_view source,
                       std::size_t line_no) {
  if (s == "strong") return Strength::kStrong;
  if (s == "weak") return Strength::kWeak;
  throw FieldError(source, line_no, "expected strong|weak, got '" + s + "'");
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot read '" + path.string() + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

void CategoryLexicon::Add(std::string_view pattern, std::string_view category) {
  const std::size_t star = pattern.find('*');
  if (pattern.empty() || category.empty()) {
    throw Error(ErrorCode::kParse, "empty pattern or category");
  }
  if (star == std::string_view::npos) {
    exact_[ToLowerAscii(pattern)].insert(std::string(category));
    return;
  }
  if (star != pattern.size() - 1 || star == 0) {
    throw Error(ErrorCode::kParse,
                "pattern '" + std::string(pattern) +
                    "' may only carry a single trailing '*' after a prefix");
  }
  prefix_[ToLowerAscii(pattern.substr(0, star))].insert(std::string(category));
}

std::set<std::string> CategoryLexicon::Match(std::string_view token) const {
  std::set<std::string> out;
  if (auto it = exact_.find(std::string(token)); it != exact_.end()) {
    out.insert(it->second.begin(), it->second.end());
  }
  if (!prefix_.empty()) {
    std::string probe;
    for (std::size_t len = 1; len <= token.size(); ++len) {
      probe.assign(token.substr(0, len));
      if (auto it = prefix_.find(probe); it != prefix_.end()) {
        out.insert(it->second.begin(), it->second.end());
      }
    }
  }
  return out;
}

bool LexiconSet::Has(FeatureGroup group) const {
  switch (group) {
    case FeatureGroup::kLexical:
      return true;
    case FeatureGroup::kSyntactic:
      return pos.has_value();
    case FeatureGroup::kEmotion:
      return emoticons.has_value();
    case FeatureGroup::kDemographic:
      return demographic.has_value();
    case FeatureGroup::kSentiment:
      return sentiment.has_value();
    case FeatureGroup::kPersonality:
      return personality.has_value();
    case FeatureGroup::kLiwc:
      return categories.has_value();
  }
  return false;
}

std::vector<FeatureGroup> LexiconSet::AvailableGroups() const {
  std::vector<FeatureGroup> out;
  for (FeatureGroup g : kAllGroups) {
    if (Has(g)) out.push_back(g);
  }
  return out;
}

std::string_view LexiconFileName(FeatureGroup group) {
  switch (group) {
    case FeatureGroup::kLexical:
      return "";
    case FeatureGroup::kSyntactic:
      return "pos.tsv";
    case FeatureGroup::kEmotion:
      return "emoticon.tsv";
    case FeatureGroup::kDemographic:
      return "demographic.tsv";
    case FeatureGroup::kSentiment:
      return "sentiment.tsv";
    case FeatureGroup::kPersonality:
      return "personality.tsv";
    case FeatureGroup::kLiwc:
      return "categories.tsv";
  }
  return "";
}

TermLexicon ParseTermLexicon(std::string_view tsv, std::string_view source) {
  TermLexicon out;
  ForEachRecord(tsv, [&](const std::vector<std::string>& fields,
                         std::size_t line_no) {
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw FieldError(source, line_no, "expected key<TAB>value");
    }
    out[ToLowerAscii(fields[0])].insert(fields[1]);
  });
  return out;
}

std::map<std::string, SentimentEntry> ParseSentimentLexicon(
    std::string_view tsv, std::string_view source) {
  std::map<std::string, SentimentEntry> out;
  ForEachRecord(tsv, [&](const std::vector<std::string>& fields,
                         std::size_t line_no) {
    if (fields.size() != 4 || fields[0].empty()) {
      throw FieldError(source, line_no,
                       "expected term<TAB>pos|neg|neutral<TAB>strong|weak"
                       "<TAB>strong|weak");
    }
    SentimentEntry e;
    if (fields[1] == "pos") {
      e.polarity = Polarity::kPositive;
    } else if (fields[1] == "neg") {
      e.polarity = Polarity::kNegative;
    } else if (fields[1] == "neutral") {
      e.polarity = Polarity::kNeutral;
    } else {
      throw FieldError(source, line_no,
                       "expected pos|neg|neutral, got '" + fields[1] + "'");
    }
    e.polarity_strength = ParseStrength(fields[2], source, line_no);
    e.subjectivity_strength = ParseStrength(fields[3], source, line_no);
    out[ToLowerAscii(fields[0])] = e;
  });
  return out;
}

CategoryLexicon ParseCategoryLexicon(std::string_view tsv,
                                     std::string_view source) {
  CategoryLexicon out;
  ForEachRecord(tsv, [&](const std::vector<std::string>& fields,
                         std::size_t line_no) {
    if (fields.size() != 2) {
      throw FieldError(source, line_no, "expected pattern<TAB>category");
    }
    try {
      out.Add(fields[0], fields[1]);
    } catch (const Error& e) {
      throw FieldError(source, line_no, e.what());
    }
  });
  return out;
}

LexiconSet LoadLexicons(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(ErrorCode::kConfig,
                "lexicon directory '" + dir.string() + "' does not exist");
  }
  LexiconSet set;
  auto load = [&dir](FeatureGroup group) -> std::optional<std::string> {
    const auto path = dir / std::string(LexiconFileName(group));
    if (!std::filesystem::exists(path)) return std::nullopt;
    return ReadFile(path);
  };
  auto source = [&dir](FeatureGroup group) {
    return (dir / std::string(LexiconFileName(group))).string();
  };
  if (auto text = load(FeatureGroup::kEmotion)) {
    set.emoticons = ParseTermLexicon(*text, source(FeatureGroup::kEmotion));
  }
  if (auto text = load(FeatureGroup::kSentiment)) {
    set.sentiment =
        ParseSentimentLexicon(*text, source(FeatureGroup::kSentiment));
  }
  if (auto text = load(FeatureGroup::kDemographic)) {
    set.demographic =
        ParseTermLexicon(*text, source(FeatureGroup::kDemographic));
  }
  if (auto text = load(FeatureGroup::kPersonality)) {
    set.personality =
        ParseTermLexicon(*text, source(FeatureGroup::kPersonality));
  }
  if (auto text = load(FeatureGroup::kLiwc)) {
    set.categories = ParseCategoryLexicon(*text, source(FeatureGroup::kLiwc));
  }
  if (auto text = load(FeatureGroup::kSyntactic)) {
    set.pos = ParseTermLexicon(*text, source(FeatureGroup::kSyntactic));
  }
  return set;
}

}  // namespace featstudy
