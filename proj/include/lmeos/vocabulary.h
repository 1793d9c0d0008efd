// Copyright 2026 The LM-EOS Segmenter Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LMEOS_VOCABULARY_H_
#define LMEOS_VOCABULARY_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lmeos/corpus.h"

namespace lmeos {

using TokenId = std::int32_t;

inline constexpr TokenId kPadId = 0;
inline constexpr TokenId kOovId = 1;

class Vocabulary {
 public:
  // Only the two reserved entries.
  Vocabulary();

  // Tokens in id order, starting with the reserved "<pad>" and "<oov>".
  explicit Vocabulary(std::vector<std::string> tokens);

  TokenId Lookup(std::string_view token) const;
  const std::string& Token(TokenId id) const { return tokens_.at(id); }
  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  std::vector<TokenId> Encode(const std::vector<std::string>& tokens) const;

  bool operator==(const Vocabulary& other) const { return tokens_ == other.tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, TokenId> index_;
};

// Keeps the most frequent tokens (at most max_size - 2 of them, ties broken
// lexicographically) that occur at least min_frequency times.
// Throws Error(kEmptyCorpus) when `examples` is empty.
Vocabulary BuildVocab(const std::vector<TrainingExample>& examples,
                      std::size_t max_size, std::size_t min_frequency = 1);

}  // namespace lmeos

#endif  // LMEOS_VOCABULARY_H_
