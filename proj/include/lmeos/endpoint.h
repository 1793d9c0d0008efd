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

#ifndef LMEOS_ENDPOINT_H_
#define LMEOS_ENDPOINT_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lmeos {

// A decoded word with its timing. The acoustic evidence available to the
// segmenter is the silence between consecutive words.
struct WordEvent {
  std::string word;
  std::int64_t start_ms = 0;
  std::int64_t end_ms = 0;

  bool operator==(const WordEvent&) const = default;
};

enum class CandidateKind { kTimeout, kStreamEnd, kHardTimeout };

std::string_view CandidateKindName(CandidateKind kind);

struct EndpointCandidate {
  // Boundary after this token (0-based).
  std::size_t after_token_index = 0;
  // Silence following the token; 0 for STREAM_END.
  std::int64_t silence_ms = 0;
  std::int64_t fired_at_ms = 0;
  CandidateKind kind = CandidateKind::kTimeout;

  bool operator==(const EndpointCandidate&) const = default;
};

// Throws Error(kUnsortedStream / kOverlappingEvents / kInvalidArgument).
void ValidateStream(const std::vector<WordEvent>& stream);

// Candidates raised by the silence gap after token `index`, given the start
// of the next word. TIMEOUT when gap >= silence_threshold_ms (fired at
// end + threshold); HARD_TIMEOUT as well when gap >= hard_timeout_ms.
std::vector<EndpointCandidate> GapCandidates(std::size_t index, std::int64_t end_ms,
                                             std::int64_t next_start_ms,
                                             std::int64_t silence_threshold_ms,
                                             std::int64_t hard_timeout_ms);

// Every candidate of the stream in firing order, closing with one
// STREAM_END after the last token. Empty for an empty stream.
std::vector<EndpointCandidate> DetectCandidates(const std::vector<WordEvent>& stream,
                                                std::int64_t silence_threshold_ms,
                                                std::int64_t hard_timeout_ms);

// Replays a stream against the wall clock: each word becomes available at
// its end time divided by the speed factor, measured from the first Next()
// call. An infinite speed factor delivers everything immediately.
class StreamReplayer {
 public:
  using Clock = std::chrono::steady_clock;

  StreamReplayer(std::vector<WordEvent> stream, double speed_factor);

  // Blocks until the next word is due; nothing once the stream is done.
  std::optional<WordEvent> Next();
  bool done() const { return next_ >= stream_.size(); }
  // Scripted delivery offset of event `i` from the replay origin.
  Clock::duration ScheduledOffset(std::size_t i) const;

 private:
  std::vector<WordEvent> stream_;
  double speed_factor_;
  std::size_t next_ = 0;
  std::optional<Clock::time_point> origin_;
};

}  // namespace lmeos

#endif  // LMEOS_ENDPOINT_H_
