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

#ifndef FEATSTUDY_HASH_H_
#define FEATSTUDY_HASH_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace featstudy {

// 64-bit FNV-1a. Used for content fingerprints that must be stable across
// platforms and standard-library implementations (std::hash is neither).
class Fingerprint {
 public:
  Fingerprint& Add(std::string_view bytes);
  Fingerprint& Add(std::uint64_t value);
  // Adds a field separator so that ("ab","c") and ("a","bc") differ.
  Fingerprint& Separator();

  std::uint64_t value() const { return state_; }
  // Lowercase 16-digit hex.
  std::string Hex() const;

 private:
  std::uint64_t state_ = 14695981039346656037ULL;
};

}  // namespace featstudy

#endif  // FEATSTUDY_HASH_H_
