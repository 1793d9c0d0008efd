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

#ifndef LMEOS_CORPUS_H_
#define LMEOS_CORPUS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lmeos {

struct RawDocument {
  std::string doc_id;
  std::string text;
};

enum class Terminal { kPeriod, kQuestion };

struct Sentence {
  std::vector<std::string> tokens;
  Terminal terminal = Terminal::kPeriod;
  std::string doc_id;
  // Position among the raw pieces produced by SplitAll(), so that adjacency
  // survives rejected neighbours.
  std::size_t index_in_doc = 0;
};

enum class Tag { kO = 0, kEos = 1 };

bool IsValidUtf8(std::string_view text);

std::string_view TagName(Tag tag);  // "O" or "eos"
std::optional<Tag> ParseTag(std::string_view name);

enum class ExampleVariant { kFull, kTruncated, kLookahead };

std::string_view VariantName(ExampleVariant variant);
std::optional<ExampleVariant> ParseVariant(std::string_view name);

struct TrainingExample {
  std::vector<std::string> tokens;
  std::vector<Tag> tags;
  ExampleVariant variant = ExampleVariant::kFull;

  // Space-joined rows, e.g. "how is the weather" / "O O O eos".
  std::string TokenRow() const;
  std::string TagRow() const;
};

// Checks the per-variant tag layout. Returns an empty string when valid.
std::string ValidateExample(const TrainingExample& example);

enum class RejectReason { kBadTerminal, kForbiddenPunct, kEmptyAfterNormalization };

std::string_view RejectReasonName(RejectReason reason);

struct FilterResult {
  std::optional<Sentence> sentence;
  std::optional<RejectReason> reason;

  bool accepted() const { return sentence.has_value(); }
};

// Splits text after . ? ! when followed by whitespace and an uppercase
// letter or digit, unless the preceding word is a known abbreviation or a
// single-letter initial. Returns every trimmed piece, including ones that do
// not end in . or ?.
std::vector<std::string> SplitAll(std::string_view text);

// SplitAll() restricted to pieces ending in . or ?.
std::vector<std::string> SplitSentences(const RawDocument& doc);

// Lowercases, strips punctuation (keeping word-internal apostrophes) and
// spells out numbers. An empty result means nothing speakable remained.
std::vector<std::string> NormalizeSpoken(std::string_view text);

// Accepts a raw sentence iff it ends in . or ? and contains no punctuation
// outside {. , ? '}. The sentence's doc_id/index_in_doc are left default.
FilterResult FilterSentence(std::string_view raw);

struct V2Examples {
  TrainingExample full;
  std::optional<TrainingExample> truncated;
};

V2Examples MakeV2Examples(const Sentence& sentence);

// Empty when `next` is absent.
std::vector<TrainingExample> MakeV3Examples(const Sentence& sentence,
                                            const Sentence* next);

struct CorpusStats {
  std::size_t documents = 0;
  std::size_t sentences_kept = 0;
  std::size_t rejected_bad_terminal = 0;
  std::size_t rejected_forbidden_punct = 0;
  std::size_t rejected_empty = 0;
  std::size_t full = 0;
  std::size_t truncated = 0;
  std::size_t lookahead = 0;

  std::size_t examples() const { return full + truncated + lookahead; }
};

// Runs the whole factory over documents in the given order. For every kept
// sentence emits FULL, TRUNCATED (if any) and, with `lookahead`, the
// LOOKAHEAD row pairing it with the first word of the immediately following
// sentence of the same document.
std::vector<TrainingExample> BuildExamples(const std::vector<RawDocument>& docs,
                                           bool lookahead,
                                           CorpusStats* stats = nullptr);

}  // namespace lmeos

#endif  // LMEOS_CORPUS_H_
