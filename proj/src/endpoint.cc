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

#include "lmeos/endpoint.h"

#include <cmath>
#include <thread>

#include "lmeos/error.h"

namespace lmeos {

std::string_view CandidateKindName(CandidateKind kind) {
  switch (kind) {
    case CandidateKind::kTimeout:
      return "TIMEOUT";
    case CandidateKind::kStreamEnd:
      return "STREAM_END";
    case CandidateKind::kHardTimeout:
      return "HARD_TIMEOUT";
  }
  return "TIMEOUT";
}

void ValidateStream(const std::vector<WordEvent>& stream) {
  for (std::size_t i = 0; i < stream.size(); ++i) {
    const auto& e = stream[i];
    if (e.start_ms < 0 || e.end_ms <= e.start_ms) {
      throw Error(ErrorCode::kInvalidArgument,
                  "word " + std::to_string(i) + " (\"" + e.word +
                      "\") needs 0 <= start_ms < end_ms");
    }
    if (i == 0) continue;
    const auto& prev = stream[i - 1];
    if (e.start_ms < prev.start_ms) {
      throw Error(ErrorCode::kUnsortedStream,
                  "word " + std::to_string(i) + " starts before word " +
                      std::to_string(i - 1));
    }
    if (e.start_ms < prev.end_ms) {
      throw Error(ErrorCode::kOverlappingEvents,
                  "word " + std::to_string(i) + " overlaps word " +
                      std::to_string(i - 1));
    }
  }
}

std::vector<EndpointCandidate> GapCandidates(std::size_t index, std::int64_t end_ms,
                                             std::int64_t next_start_ms,
                                             std::int64_t silence_threshold_ms,
                                             std::int64_t hard_timeout_ms) {
  std::vector<EndpointCandidate> out;
  const std::int64_t gap = next_start_ms - end_ms;
  if (gap >= silence_threshold_ms) {
    out.push_back({index, gap, end_ms + silence_threshold_ms, CandidateKind::kTimeout});
  }
  if (gap >= hard_timeout_ms) {
    out.push_back({index, gap, end_ms + hard_timeout_ms, CandidateKind::kHardTimeout});
  }
  return out;
}

std::vector<EndpointCandidate> DetectCandidates(const std::vector<WordEvent>& stream,
                                                std::int64_t silence_threshold_ms,
                                                std::int64_t hard_timeout_ms) {
  if (silence_threshold_ms <= 0 || hard_timeout_ms < silence_threshold_ms) {
    throw Error(ErrorCode::kInvalidArgument,
                "need 0 < silence_threshold_ms <= hard_timeout_ms");
  }
  ValidateStream(stream);
  std::vector<EndpointCandidate> out;
  if (stream.empty()) return out;
  for (std::size_t i = 0; i + 1 < stream.size(); ++i) {
    for (auto& c : GapCandidates(i, stream[i].end_ms, stream[i + 1].start_ms,
                                 silence_threshold_ms, hard_timeout_ms)) {
      out.push_back(c);
    }
  }
  out.push_back({stream.size() - 1, 0, stream.back().end_ms, CandidateKind::kStreamEnd});
  return out;
}

StreamReplayer::StreamReplayer(std::vector<WordEvent> stream, double speed_factor)
    : stream_(std::move(stream)), speed_factor_(speed_factor) {
  if (!(speed_factor > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "speed_factor must be positive");
  }
}

StreamReplayer::Clock::duration StreamReplayer::ScheduledOffset(std::size_t i) const {
  if (std::isinf(speed_factor_)) return Clock::duration::zero();
  const double ms = static_cast<double>(stream_.at(i).end_ms) / speed_factor_;
  return std::chrono::duration_cast<Clock::duration>(
      std::chrono::duration<double, std::milli>(ms));
}

std::optional<WordEvent> StreamReplayer::Next() {
  if (done()) return std::nullopt;
  if (!origin_) origin_ = Clock::now();
  if (!std::isinf(speed_factor_)) {
    std::this_thread::sleep_until(*origin_ + ScheduledOffset(next_));
  }
  return stream_[next_++];
}

}  // namespace lmeos
