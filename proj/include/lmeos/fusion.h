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

#ifndef LMEOS_FUSION_H_
#define LMEOS_FUSION_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lmeos/endpoint.h"
#include "lmeos/tagger.h"

namespace lmeos {

enum class PolicyMode { kV1, kV2, kV3 };

std::string_view PolicyModeName(PolicyMode mode);  // "v1", "v2", "v3"
std::optional<PolicyMode> ParsePolicyMode(std::string_view name);

struct Policy {
  PolicyMode mode = PolicyMode::kV1;
  std::int64_t silence_threshold_ms = 500;
  std::int64_t hard_timeout_ms = 2000;
  double lm_threshold = 0.5;
  // V3 only; defaults to hard_timeout_ms - silence_threshold_ms.
  std::optional<std::int64_t> lookahead_wait_ms;

  std::int64_t EffectiveLookaheadWait() const {
    return lookahead_wait_ms.value_or(hard_timeout_ms - silence_threshold_ms);
  }
};

// Throws Error(kInvalidArgument) describing the first violated rule.
void ValidatePolicy(const Policy& policy);

enum class Decision { kVadOnly, kLmConfirmed, kHardTimeout, kStreamEnd };

std::string_view DecisionName(Decision decision);

struct Segment {
  std::vector<WordEvent> words;
  std::size_t boundary_index = 0;
  Decision decision = Decision::kStreamEnd;
  std::optional<double> p_eos;
  std::int64_t latency_ms = 0;

  std::int64_t start_ms() const { return words.front().start_ms; }
  std::int64_t end_ms() const { return words.back().end_ms; }
};

enum class Verdict { kEmit, kVeto, kSkipped };

std::string_view VerdictName(Verdict verdict);

struct TraceEntry {
  EndpointCandidate candidate;
  bool lm_queried = false;
  std::optional<double> p_eos;
  // V3: whether the next word arrived inside the look-ahead wait.
  std::optional<bool> lookahead_arrived;
  Verdict verdict = Verdict::kSkipped;
  std::int64_t latency_ms = 0;
};

struct SegmenterTrace {
  std::vector<TraceEntry> entries;
};

struct FusionResult {
  std::vector<Segment> segments;
  SegmenterTrace trace;
};

// Segments a word stream under `policy`. V1 takes every silence candidate.
// V2 and V3 ask the tagger at each TIMEOUT candidate and keep the boundary
// iff P(EOS) >= lm_threshold; a HARD_TIMEOUT candidate in the same gap always
// closes the segment. V3 waits up to the look-ahead window for the next word
// and falls back to a flushed prediction when it does not arrive. The tagger
// runs causally over the whole stream, so its predictions never depend on
// earlier decisions.
//
// Throws Error(kModelRequired) when V2/V3 get no model and
// Error(kModelModeMismatch) when the model's look-ahead flag does not match.
FusionResult SegmentStream(const std::vector<WordEvent>& stream, const Policy& policy,
                           const TaggerModel* model);

// Boundary indices of all segments but the last.
std::vector<std::size_t> InternalBoundaries(const std::vector<Segment>& segments);

// Runs every policy on the same stream. V2 policies use `model_v2`, V3
// policies `model_v3`.
std::map<PolicyMode, FusionResult> ComparePolicies(const std::vector<WordEvent>& stream,
                                                   const std::vector<Policy>& policies,
                                                   const TaggerModel* model_v2,
                                                   const TaggerModel* model_v3);

}  // namespace lmeos

#endif  // LMEOS_FUSION_H_
