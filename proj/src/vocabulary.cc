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

#include "lmeos/vocabulary.h"

#include <algorithm>
#include <map>

#include "lmeos/error.h"

namespace lmeos {

Vocabulary::Vocabulary() : Vocabulary(std::vector<std::string>{"<pad>", "<oov>"}) {}

Vocabulary::Vocabulary(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "vocabulary needs the two reserved entries");
  }
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (!index_.emplace(tokens_[i], static_cast<TokenId>(i)).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate token: " + tokens_[i]);
    }
  }
}

TokenId Vocabulary::Lookup(std::string_view token) const {
  const auto it = index_.find(std::string(token));
  if (it == index_.end() || it->second == kPadId) return kOovId;
  return it->second;
}

std::vector<TokenId> Vocabulary::Encode(const std::vector<std::string>& tokens) const {
  std::vector<TokenId> ids;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) ids.push_back(Lookup(t));
  return ids;
}

Vocabulary BuildVocab(const std::vector<TrainingExample>& examples,
                      std::size_t max_size, std::size_t min_frequency) {
  if (examples.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "no training examples");
  }
  if (max_size < 2) {
    throw Error(ErrorCode::kInvalidArgument, "max_size must be at least 2");
  }
  std::map<std::string, std::size_t> counts;
  for (const auto& ex : examples) {
    for (const auto& t : ex.tokens) ++counts[t];
  }
  std::vector<std::pair<std::string, std::size_t>> ranked;
  for (auto& [token, count] : counts) {
    if (count >= min_frequency && token != "<pad>" && token != "<oov>") {
      ranked.emplace_back(token, count);
    }
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<std::string> tokens = {"<pad>", "<oov>"};
  for (auto& [token, count] : ranked) {
    if (tokens.size() >= max_size) break;
    tokens.push_back(token);
  }
  return Vocabulary(std::move(tokens));
}

}  // namespace lmeos
