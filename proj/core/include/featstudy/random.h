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

#ifndef FEATSTUDY_RANDOM_H_
#define FEATSTUDY_RANDOM_H_

#include <random>
#include <span>
#include <utility>

namespace featstudy {

// Fisher-Yates driven directly by mt19937_64 output. std::shuffle and the
// std distributions are implementation-defined; this is not.
template <typename T>
void SeededShuffle(std::span<T> items, std::mt19937_64& rng) {
  if (items.size() < 2) return;
  for (std::size_t i = items.size() - 1; i > 0; --i) {
    std::swap(items[i], items[rng() % (i + 1)]);
  }
}

}  // namespace featstudy

#endif  // FEATSTUDY_RANDOM_H_
