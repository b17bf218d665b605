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

#include "featstudy/featurize.h"

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "featstudy/error.h"
#include "featstudy/parallel.h"

namespace featstudy {
namespace {

using FeatureKey = std::pair<FeatureGroup, std::string>;

struct PhraseEntry {
  std::vector<std::string> tokens;
  const std::set<std::string>* indicators;
};

// Phrases indexed by their first token.
using PhraseIndex = std::map<std::string, std::vector<PhraseEntry>>;

PhraseIndex BuildPhraseIndex(const TermLexicon& lexicon,
                             const Tokenizer& tokenizer) {
  PhraseIndex index;
  for (const auto& [phrase, indicators] : lexicon) {
    PhraseEntry entry{{}, &indicators};
    for (auto& t : tokenizer.Tokenize(phrase)) {
      entry.tokens.push_back(std::move(t.surface));
    }
    if (entry.tokens.empty()) continue;
    index[entry.tokens.front()].push_back(std::move(entry));
  }
  return index;
}

void MatchPhrases(const std::vector<Token>& tokens, const PhraseIndex& index,
                  FeatureGroup group, std::string_view prefix,
                  std::set<FeatureKey>& out) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto it = index.find(tokens[i].surface);
    if (it == index.end()) continue;
    for (const auto& entry : it->second) {
      if (i + entry.tokens.size() > tokens.size()) continue;
      bool match = true;
      for (std::size_t k = 1; k < entry.tokens.size() && match; ++k) {
        match = tokens[i + k].surface == entry.tokens[k];
      }
      if (!match) continue;
      for (const auto& ind : *entry.indicators) {
        out.emplace(group, std::string(prefix) + ind);
      }
    }
  }
}

std::string_view PolarityWord(Polarity p) {
  switch (p) {
    case Polarity::kPositive:
      return "positive";
    case Polarity::kNegative:
      return "negative";
    case Polarity::kNeutral:
      return "neutral";
  }
  return "neutral";
}

std::string_view StrengthWord(Strength s) {
  return s == Strength::kStrong ? "strong" : "weak";
}

}  // namespace

Tokenizer MakeTokenizer(const LexiconSet& lexicons) {
  std::vector<std::string> surfaces;
  if (lexicons.emoticons) {
    for (const auto& [surface, unused] : *lexicons.emoticons) {
      surfaces.push_back(surface);
    }
  }
  return Tokenizer(surfaces);
}

FeatureMatrix Encode(const Corpus& corpus, const LexiconSet& lexicons,
                     std::span<const FeatureGroup> groups,
                     const EncodeOptions& options) {
  if (groups.empty()) {
    throw Error(ErrorCode::kConfig, "at least one feature group is required");
  }
  std::array<bool, kAllGroups.size()> wanted{};
  for (FeatureGroup g : groups) {
    if (!lexicons.Has(g)) {
      throw Error(ErrorCode::kConfig,
                  "no lexicon for requested group '" +
                      std::string(GroupName(g)) + "' (expected " +
                      std::string(LexiconFileName(g)) + ")");
    }
    wanted[static_cast<std::size_t>(g)] = true;
  }
  auto on = [&wanted](FeatureGroup g) {
    return wanted[static_cast<std::size_t>(g)];
  };

  const Tokenizer tokenizer = MakeTokenizer(lexicons);
  PhraseIndex demographic_phrases;
  PhraseIndex personality_phrases;
  if (on(FeatureGroup::kDemographic)) {
    demographic_phrases = BuildPhraseIndex(*lexicons.demographic, tokenizer);
  }
  if (on(FeatureGroup::kPersonality)) {
    personality_phrases = BuildPhraseIndex(*lexicons.personality, tokenizer);
  }

  const auto& docs = corpus.documents();
  std::vector<std::set<FeatureKey>> per_doc(docs.size());
  ParallelFor(docs.size(), options.jobs, [&](std::size_t d) {
    const auto tokens = tokenizer.Tokenize(docs[d].text);
    auto& out = per_doc[d];
    for (const auto& token : tokens) {
      const std::string& s = token.surface;
      const bool emoticon = tokenizer.IsEmoticon(s);
      if (on(FeatureGroup::kLexical) && !emoticon) {
        out.emplace(FeatureGroup::kLexical, "unigram=" + s);
      }
      if (on(FeatureGroup::kSyntactic)) {
        if (auto it = lexicons.pos->find(s); it != lexicons.pos->end()) {
          for (const auto& tag : it->second) {
            out.emplace(FeatureGroup::kSyntactic, "pos=" + tag);
          }
        }
      }
      if (on(FeatureGroup::kEmotion) && emoticon) {
        for (const auto& cat : lexicons.emoticons->at(s)) {
          out.emplace(FeatureGroup::kEmotion, "emoticon=" + cat);
        }
      }
      if (on(FeatureGroup::kSentiment)) {
        if (auto it = lexicons.sentiment->find(s);
            it != lexicons.sentiment->end()) {
          const SentimentEntry& e = it->second;
          std::string pol = "sent=";
          pol += StrengthWord(e.polarity_strength);
          pol += '_';
          pol += PolarityWord(e.polarity);
          out.emplace(FeatureGroup::kSentiment, std::move(pol));
          std::string subj = "sent=";
          subj += StrengthWord(e.subjectivity_strength);
          subj += "_subjective";
          out.emplace(FeatureGroup::kSentiment, std::move(subj));
        }
      }
      if (on(FeatureGroup::kLiwc)) {
        for (const auto& cat : lexicons.categories->Match(s)) {
          out.emplace(FeatureGroup::kLiwc, "liwc=" + cat);
        }
      }
    }
    if (on(FeatureGroup::kDemographic)) {
      MatchPhrases(tokens, demographic_phrases, FeatureGroup::kDemographic,
                   "demo=", out);
    }
    if (on(FeatureGroup::kPersonality)) {
      MatchPhrases(tokens, personality_phrases, FeatureGroup::kPersonality,
                   "trait=", out);
    }
  });

  // Deterministic merge: the ordered union defines the columns.
  std::map<FeatureKey, std::int32_t> columns;
  for (const auto& features : per_doc) {
    for (const auto& key : features) columns.emplace(key, 0);
  }
  FeatureRegistry registry;
  registry.reserve(columns.size());
  for (auto& [key, col] : columns) {
    col = static_cast<std::int32_t>(registry.size());
    registry.push_back({col, key.first, key.second});
  }
  std::vector<std::size_t> offsets{0};
  offsets.reserve(docs.size() + 1);
  std::vector<std::int32_t> indices;
  for (const auto& features : per_doc) {
    // Both orders agree, so each row comes out sorted.
    for (const auto& key : features) indices.push_back(columns.at(key));
    offsets.push_back(indices.size());
  }
  return FeatureMatrix(std::move(registry), std::move(offsets),
                       std::move(indices));
}

}  // namespace featstudy
