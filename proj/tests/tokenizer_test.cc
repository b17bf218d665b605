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

#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace featstudy {
namespace {

std::vector<std::string> Surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

const Tokenizer& EmoticonTokenizer() {
  static const Tokenizer tokenizer({":(", ":-(", ":'(", ":D", "<3", "-_-"});
  return tokenizer;
}

TEST(TokenizerTest, EmoticonMatchedBeforePunctuation) {
  EXPECT_EQ(Surfaces(EmoticonTokenizer().Tokenize("feeling down :(")),
            (std::vector<std::string>{"feeling", "down", ":("}));
}

TEST(TokenizerTest, EmptyInput) {
  EXPECT_TRUE(EmoticonTokenizer().Tokenize("").empty());
  EXPECT_TRUE(Tokenizer().Tokenize("  \t!!?").empty());
}

TEST(TokenizerTest, PunctuationSplitAndLowercase) {
  EXPECT_EQ(Surfaces(Tokenizer().Tokenize("Mid-semester exams!!")),
            (std::vector<std::string>{"mid", "semester", "exams"}));
}

TEST(TokenizerTest, KeepsApostrophesHashtagsAndMentions) {
  EXPECT_EQ(Surfaces(Tokenizer().Tokenize("Can't sleep #Insomnia @Doc 'quoted'")),
            (std::vector<std::string>{"can't", "sleep", "#insomnia", "@doc",
                                      "quoted"}));
  EXPECT_EQ(Surfaces(Tokenizer().Tokenize("# @ ''")), std::vector<std::string>{});
}

TEST(TokenizerTest, GreedyLongestEmoticon) {
  EXPECT_EQ(Surfaces(EmoticonTokenizer().Tokenize("ugh :'( and :-( -_-")),
            (std::vector<std::string>{"ugh", ":'(", "and", ":-(", "-_-"}));
  // Lowercased surface, matched case-insensitively.
  EXPECT_EQ(Surfaces(EmoticonTokenizer().Tokenize("yay :D")),
            (std::vector<std::string>{"yay", ":d"}));
}

TEST(TokenizerTest, EmoticonNeedsWordBoundary) {
  // ":D" inside ":Dog" does not match since a word continues after it.
  EXPECT_EQ(Surfaces(EmoticonTokenizer().Tokenize(":Dog")),
            (std::vector<std::string>{"dog"}));
  EXPECT_EQ(Surfaces(EmoticonTokenizer().Tokenize("i<3u")),
            (std::vector<std::string>{"i", "3u"}));
}

TEST(TokenizerTest, NonAsciiBytesStayInWords) {
  EXPECT_EQ(Surfaces(Tokenizer().Tokenize("Café déjà-vu")),
            (std::vector<std::string>{"café", "déjà", "vu"}));
}

TEST(TokenizerTest, PositionsStrictlyIncreasingAndSurfacesNonEmpty) {
  const auto tokens =
      EmoticonTokenizer().Tokenize("a, b... c :( <3 d'e #f @g -- h");
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    EXPECT_EQ(tokens[i].position, i);
    EXPECT_FALSE(tokens[i].surface.empty());
  }
}

}  // namespace
}  // namespace featstudy
