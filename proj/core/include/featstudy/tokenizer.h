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

#ifndef FEATSTUDY_TOKENIZER_H_
#define FEATSTUDY_TOKENIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace featstudy {

struct Token {
  std::string surface;
  std::size_t position = 0;

  bool operator==(const Token&) const = default;
};

// Lowercasing tokenizer for short social-media texts.
//
// Emoticon surfaces (if any) are matched greedily, longest first, before any
// punctuation splitting. Remaining text is split on whitespace and
// punctuation; runs of ASCII alphanumerics, apostrophes and non-ASCII bytes
// form tokens, and a leading '#' or '@' stays attached. Apostrophes at the
// edges of a run are trimmed.
class Tokenizer {
 public:
  Tokenizer() = default;
  explicit Tokenizer(const std::vector<std::string>& emoticons);

  std::vector<Token> Tokenize(std::string_view text) const;

  // `surface` is compared after lowercasing.
  bool IsEmoticon(std::string_view surface) const;

 private:
  std::unordered_set<std::string> emoticons_;
  std::size_t max_emoticon_length_ = 0;
};

// ASCII lowercasing; bytes >= 0x80 pass through unchanged.
std::string ToLowerAscii(std::string_view text);

}  // namespace featstudy

#endif  // FEATSTUDY_TOKENIZER_H_
