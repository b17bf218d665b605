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

#ifndef FEATSTUDY_FEATURIZE_H_
#define FEATSTUDY_FEATURIZE_H_

#include <cstddef>
#include <span>

#include "featstudy/corpus.h"
#include "featstudy/feature_matrix.h"
#include "featstudy/lexicon.h"
#include "featstudy/tokenizer.h"

namespace featstudy {

struct EncodeOptions {
  // Worker threads for per-document extraction; 0 = hardware concurrency.
  // Output does not depend on this value.
  std::size_t jobs = 1;
};

// Builds the tokenizer used by Encode: emoticon surfaces from `lexicons` are
// matched before punctuation splitting whenever an emoticon lexicon exists.
Tokenizer MakeTokenizer(const LexiconSet& lexicons);

// Encodes every document as binary presence over the requested groups.
//
// Columns are the features observed in the corpus, ordered by group (enum
// order) and then by name. Feature names:
//   lexical      unigram=<token>           (emoticon tokens excluded)
//   syntactic    pos=<tag>
//   emotion      emoticon=<category>
//   demographic  demo=<indicator>
//   sentiment    sent=<strong|weak>_<positive|negative|neutral>,
//                sent=<strong|weak>_subjective
//   personality  trait=<trait>
//   liwc         liwc=<category>
//
// Throws Error(kConfig) if `groups` is empty or a requested non-lexical group
// has no lexicon.
FeatureMatrix Encode(const Corpus& corpus, const LexiconSet& lexicons,
                     std::span<const FeatureGroup> groups,
                     const EncodeOptions& options = {});

}  // namespace featstudy

#endif  // FEATSTUDY_FEATURIZE_H_
