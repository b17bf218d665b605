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

#ifndef FEATSTUDY_LEXICON_H_
#define FEATSTUDY_LEXICON_H_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "featstudy/feature_matrix.h"

namespace featstudy {

// key -> categories. Repeated keys accumulate categories.
using TermLexicon = std::map<std::string, std::set<std::string>>;

enum class Polarity { kPositive, kNegative, kNeutral };
enum class Strength { kStrong, kWeak };

struct SentimentEntry {
  Polarity polarity = Polarity::kNeutral;
  Strength polarity_strength = Strength::kWeak;
  Strength subjectivity_strength = Strength::kWeak;

  bool operator==(const SentimentEntry&) const = default;
};

// LIWC-style category dictionary. A pattern is either an exact term or a
// prefix followed by a single trailing '*'. Every matching pattern fires.
class CategoryLexicon {
 public:
  // Throws Error(kParse) for malformed patterns.
  void Add(std::string_view pattern, std::string_view category);

  // Categories of all patterns matching `token` (already lowercased).
  std::set<std::string> Match(std::string_view token) const;

  bool empty() const { return exact_.empty() && prefix_.empty(); }
  std::size_t size() const { return exact_.size() + prefix_.size(); }

 private:
  TermLexicon exact_;
  TermLexicon prefix_;
};

// Dictionaries behind the six non-lexical groups. A disengaged optional means
// the lexicon was not supplied; an engaged but empty one is supplied and
// simply never fires.
struct LexiconSet {
  std::optional<TermLexicon> emoticons;  // surface -> category (e.g. SAD)
  std::optional<std::map<std::string, SentimentEntry>> sentiment;
  std::optional<TermLexicon> demographic;  // phrase -> indicator
  std::optional<TermLexicon> personality;  // phrase -> trait
  std::optional<CategoryLexicon> categories;
  std::optional<TermLexicon> pos;  // token -> tag

  // The lexical group needs no lexicon and is always available.
  bool Has(FeatureGroup group) const;
  std::vector<FeatureGroup> AvailableGroups() const;
};

// File name expected for a group's lexicon inside a lexicon directory, or
// empty for the lexical group.
std::string_view LexiconFileName(FeatureGroup group);

// Loads emoticon.tsv, sentiment.tsv, categories.tsv, demographic.tsv,
// personality.tsv and pos.tsv from `dir`. Missing files leave the
// corresponding member disengaged. Lines are tab-separated; blank lines and
// lines starting with "#" are ignored.
LexiconSet LoadLexicons(const std::filesystem::path& dir);

// Parsers for individual files, exposed for testing. `source` names the input
// in error messages.
TermLexicon ParseTermLexicon(std::string_view tsv, std::string_view source);
std::map<std::string, SentimentEntry> ParseSentimentLexicon(
    std::string_view tsv, std::string_view source);
CategoryLexicon ParseCategoryLexicon(std::string_view tsv,
                                     std::string_view source);

}  // namespace featstudy

#endif  // FEATSTUDY_LEXICON_H_
