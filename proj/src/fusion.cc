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

#include "lmeos/fusion.h"

#include <algorithm>
#include <cmath>

#include "lmeos/error.h"

namespace lmeos {

std::string_view PolicyModeName(PolicyMode mode) {
  switch (mode) {
    case PolicyMode::kV1:
      return "v1";
    case PolicyMode::kV2:
      return "v2";
    case PolicyMode::kV3:
      return "v3";
  }
  return "v1";
}

std::optional<PolicyMode> ParsePolicyMode(std::string_view name) {
  if (name == "v1") return PolicyMode::kV1;
  if (name == "v2") return PolicyMode::kV2;
  if (name == "v3") return PolicyMode::kV3;
  return std::nullopt;
}

std::string_view DecisionName(Decision decision) {
  switch (decision) {
    case Decision::kVadOnly:
      return "vad_only";
    case Decision::kLmConfirmed:
      return "lm_confirmed";
    case Decision::kHardTimeout:
      return "hard_timeout";
    case Decision::kStreamEnd:
      return "stream_end";
  }
  return "stream_end";
}

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kEmit:
      return "emit";
    case Verdict::kVeto:
      return "veto";
    case Verdict::kSkipped:
      return "skipped";
  }
  return "skipped";
}

void ValidatePolicy(const Policy& policy) {
  if (!(policy.lm_threshold >= 0.0 && policy.lm_threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "lm_threshold must lie in [0, 1]");
  }
  if (policy.silence_threshold_ms <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "silence_threshold_ms must be positive");
  }
  if (policy.hard_timeout_ms < policy.silence_threshold_ms) {
    throw Error(ErrorCode::kInvalidArgument,
                "hard_timeout_ms must be >= silence_threshold_ms");
  }
  const std::int64_t wait = policy.EffectiveLookaheadWait();
  if (wait < 0 || wait > policy.hard_timeout_ms - policy.silence_threshold_ms) {
    throw Error(ErrorCode::kInvalidArgument,
                "lookahead_wait_ms must lie in [0, hard_timeout_ms - silence_threshold_ms]");
  }
}

namespace {

void CheckModel(PolicyMode mode, const TaggerModel* model) {
  if (mode == PolicyMode::kV1) return;
  if (model == nullptr) {
    throw Error(ErrorCode::kModelRequired,
                std::string(PolicyModeName(mode)) + " needs an LM-EOS model");
  }
  const bool want_lookahead = mode == PolicyMode::kV3;
  if (model->lookahead != want_lookahead) {
    throw Error(ErrorCode::kModelModeMismatch,
                std::string(PolicyModeName(mode)) + " needs a model trained " +
                    (want_lookahead ? "with" : "without") + " look-ahead");
  }
}

class Segmenter {
 public:
  Segmenter(const std::vector<WordEvent>& stream, const Policy& policy,
            const TaggerModel* model)
      : stream_(stream), policy_(policy), model_(model) {
    if (model_) state_ = BeginStream(*model_);
    p_eos_.assign(stream.size(), 0.0);
  }

  FusionResult Run() {
    const std::size_t n = stream_.size();
    for (std::size_t i = 0; i < n; ++i) {
      ConsumeWord(i);
      if (i + 1 == n) break;
      const auto candidates =
          GapCandidates(i, stream_[i].end_ms, stream_[i + 1].start_ms,
                        policy_.silence_threshold_ms, policy_.hard_timeout_ms);
      bool closed = false;
      std::optional<double> last_p;
      for (const auto& c : candidates) {
        if (c.kind == CandidateKind::kTimeout) {
          closed = HandleTimeout(c, last_p);
        } else if (closed) {
          result_.trace.entries.push_back(
              {c, false, std::nullopt, std::nullopt, Verdict::kSkipped,
               c.fired_at_ms - stream_[i].end_ms});
        } else {
          TraceEntry entry{c, false, last_p, std::nullopt, Verdict::kEmit,
                           c.fired_at_ms - stream_[i].end_ms};
          result_.trace.entries.push_back(entry);
          Close(i, Decision::kHardTimeout, last_p, entry.latency_ms);
          closed = true;
        }
      }
    }
    if (n > 0) FinishStream();
    return std::move(result_);
  }

 private:
  void ConsumeWord(std::size_t i) {
    if (!model_) return;
    if (auto pred = Consume(*model_, state_, stream_[i].word)) {
      p_eos_[pred->token_index] = pred->p_eos;
    }
  }

  // Returns whether the segment was closed.
  bool HandleTimeout(const EndpointCandidate& c, std::optional<double>& p_out) {
    const std::size_t i = c.after_token_index;
    const std::int64_t end = stream_[i].end_ms;
    TraceEntry entry{c, false, std::nullopt, std::nullopt, Verdict::kEmit,
                     c.fired_at_ms - end};
    switch (policy_.mode) {
      case PolicyMode::kV1:
        result_.trace.entries.push_back(entry);
        Close(i, Decision::kVadOnly, std::nullopt, entry.latency_ms);
        return true;
      case PolicyMode::kV2:
        entry.lm_queried = true;
        entry.p_eos = p_eos_[i];
        break;
      case PolicyMode::kV3: {
        entry.lm_queried = true;
        const std::int64_t deadline =
            c.fired_at_ms + policy_.EffectiveLookaheadWait();
        const WordEvent& next = stream_[i + 1];
        TaggerState peek = state_;
        if (next.end_ms <= deadline) {
          entry.lookahead_arrived = true;
          entry.p_eos = Consume(*model_, peek, next.word)->p_eos;
          entry.latency_ms = std::max(c.fired_at_ms, next.end_ms) - end;
        } else {
          entry.lookahead_arrived = false;
          entry.p_eos = Flush(*model_, peek)->p_eos;
          entry.latency_ms = deadline - end;
        }
        break;
      }
    }
    p_out = entry.p_eos;
    entry.verdict = *entry.p_eos >= policy_.lm_threshold ? Verdict::kEmit : Verdict::kVeto;
    result_.trace.entries.push_back(entry);
    if (entry.verdict == Verdict::kVeto) return false;
    Close(i, Decision::kLmConfirmed, entry.p_eos, entry.latency_ms);
    return true;
  }

  void FinishStream() {
    const std::size_t last = stream_.size() - 1;
    std::optional<double> p;
    if (model_) {
      if (auto pred = Flush(*model_, state_)) p_eos_[pred->token_index] = pred->p_eos;
      p = p_eos_[last];
    }
    EndpointCandidate c{last, 0, stream_[last].end_ms, CandidateKind::kStreamEnd};
    result_.trace.entries.push_back(
        {c, model_ != nullptr, p, std::nullopt, Verdict::kEmit, 0});
    Close(last, Decision::kStreamEnd, p, 0);
  }

  void Close(std::size_t boundary, Decision decision, std::optional<double> p,
             std::int64_t latency) {
    Segment seg;
    seg.words.assign(stream_.begin() + static_cast<std::ptrdiff_t>(open_),
                     stream_.begin() + static_cast<std::ptrdiff_t>(boundary) + 1);
    seg.boundary_index = boundary;
    seg.decision = decision;
    seg.p_eos = p;
    seg.latency_ms = latency;
    result_.segments.push_back(std::move(seg));
    open_ = boundary + 1;
  }

  const std::vector<WordEvent>& stream_;
  const Policy& policy_;
  const TaggerModel* model_;
  TaggerState state_;
  std::vector<double> p_eos_;
  std::size_t open_ = 0;
  FusionResult result_;
};

}  // namespace

FusionResult SegmentStream(const std::vector<WordEvent>& stream, const Policy& policy,
                           const TaggerModel* model) {
  ValidatePolicy(policy);
  CheckModel(policy.mode, model);
  ValidateStream(stream);
  if (policy.mode == PolicyMode::kV1) model = nullptr;
  return Segmenter(stream, policy, model).Run();
}

std::vector<std::size_t> InternalBoundaries(const std::vector<Segment>& segments) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k + 1 < segments.size(); ++k) {
    out.push_back(segments[k].boundary_index);
  }
  return out;
}

std::map<PolicyMode, FusionResult> ComparePolicies(const std::vector<WordEvent>& stream,
                                                   const std::vector<Policy>& policies,
                                                   const TaggerModel* model_v2,
                                                   const TaggerModel* model_v3) {
  std::map<PolicyMode, FusionResult> out;
  for (const auto& policy : policies) {
    const TaggerModel* model = policy.mode == PolicyMode::kV2   ? model_v2
                               : policy.mode == PolicyMode::kV3 ? model_v3
                                                                : nullptr;
    const std::vector<WordEvent> copy = stream;
    out[policy.mode] = SegmentStream(copy, policy, model);
  }
  return out;
}

}  // namespace lmeos
