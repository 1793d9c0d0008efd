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

#ifndef LMEOS_SYNTH_H_
#define LMEOS_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lmeos/corpus.h"
#include "lmeos/io.h"
#include "lmeos/lstm.h"

namespace lmeos {

// A small English command/question grammar used to fabricate training
// corpora and benchmark streams. Several templates end in an optional
// modifier, so a sentence minus its last words is often a sentence too.
struct SynthSentence {
  std::vector<std::string> tokens;  // spoken form
  bool question = false;
};

SynthSentence SampleSentence(SeededRng& rng);

// Written form: capitalised, digits for some numbers, final . or ?.
std::string RenderWritten(const SynthSentence& sentence, SeededRng& rng);

// Documents of 3-8 sentences each, in written form.
std::vector<RawDocument> MakeSyntheticDocuments(std::size_t documents, std::uint64_t seed);

// Distinct sentences none of which is a proper prefix of another.
std::vector<SynthSentence> SamplePrefixFreeSentences(std::size_t count, std::uint64_t seed);

// Distinct sentences whose token strings are not in `exclude`.
std::vector<std::vector<std::string>> SampleHeldOutSentences(
    std::size_t count, std::uint64_t seed, const std::vector<RawDocument>& exclude);

struct BenchmarkOptions {
  std::size_t streams = 200;
  std::size_t min_sentences = 3;
  std::size_t max_sentences = 6;
  double mid_pause_probability = 0.3;  // per sentence, at one inner gap
  double end_pause_probability = 0.9;  // per sentence end
  std::int64_t pause_min_ms = 600;
  std::int64_t pause_max_ms = 1400;
  std::int64_t gap_min_ms = 20;
  std::int64_t gap_max_ms = 250;
  std::int64_t word_min_ms = 150;
  std::int64_t word_max_ms = 450;
};

// Streams of randomly drawn sentences with word timings. Reference
// boundaries are the true sentence ends (stream end excluded).
std::vector<SuiteStream> MakeBenchmark(const std::vector<std::vector<std::string>>& sentences,
                                       const BenchmarkOptions& options, std::uint64_t seed);

// "how is the weather in <pause> seattle <pause> i'm new in town" with
// 600 ms pauses and short gaps elsewhere.
std::vector<WordEvent> DemoStream();

}  // namespace lmeos

#endif  // LMEOS_SYNTH_H_
