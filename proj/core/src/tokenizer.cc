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

#include "featstudy/tokenizer.h"

#include <algorithm>

namespace featstudy {
namespace {

bool IsWordByte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '\'' || c >= 0x80;
}

bool IsSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

}  // namespace

std::string ToLowerAscii(std::string_view text) {
  std::string out(text);
  for (char& ch : out) {
    if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
  }
  return out;
}

Tokenizer::Tokenizer(const std::vector<std::string>& emoticons) {
  for (const auto& e : emoticons) {
    if (e.empty()) continue;
    max_emoticon_length_ = std::max(max_emoticon_length_, e.size());
    emoticons_.insert(ToLowerAscii(e));
  }
}

bool Tokenizer::IsEmoticon(std::string_view surface) const {
  return emoticons_.count(ToLowerAscii(surface)) > 0;
}

std::vector<Token> Tokenizer::Tokenize(std::string_view raw) const {
  const std::string text = ToLowerAscii(raw);
  const std::size_t n = text.size();
  std::vector<Token> tokens;
  auto emit = [&tokens](std::string surface) {
    tokens.push_back({std::move(surface), tokens.size()});
  };
  auto byte = [&text](std::size_t i) {
    return static_cast<unsigned char>(text[i]);
  };

  std::size_t i = 0;
  while (i < n) {
    if (IsSpace(byte(i))) {
      ++i;
      continue;
    }
    // Emoticons may start only where a word does not continue.
    if (!emoticons_.empty() && (i == 0 || !IsWordByte(byte(i - 1)))) {
      std::size_t matched = 0;
      for (std::size_t len = std::min(max_emoticon_length_, n - i); len > 0;
           --len) {
        if (!emoticons_.count(text.substr(i, len))) continue;
        const bool ends_in_word = IsWordByte(byte(i + len - 1));
        if (ends_in_word && i + len < n && IsWordByte(byte(i + len))) continue;
        matched = len;
        break;
      }
      if (matched > 0) {
        emit(text.substr(i, matched));
        i += matched;
        continue;
      }
    }
    std::size_t start = i;
    if ((byte(i) == '#' || byte(i) == '@') && i + 1 < n &&
        IsWordByte(byte(i + 1))) {
      ++i;
    }
    const std::size_t run_start = i;
    while (i < n && IsWordByte(byte(i))) ++i;
    if (i == run_start) {
      ++i;  // lone punctuation
      continue;
    }
    std::size_t lo = run_start;
    std::size_t hi = i;
    while (lo < hi && text[lo] == '\'') ++lo;
    while (hi > lo && text[hi - 1] == '\'') --hi;
    if (lo == hi) continue;
    std::string surface = run_start > start ? text.substr(start, 1) : "";
    surface += text.substr(lo, hi - lo);
    emit(std::move(surface));
  }
  return tokens;
}

}  // namespace featstudy
