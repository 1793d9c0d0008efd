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

#include "lmeos/tagger.h"

#include <cmath>
#include <sstream>

#include "lmeos/error.h"

namespace lmeos {
namespace {

void CheckHyperparams(const Hyperparams& hp) {
  if (hp.embed_dim == 0 || hp.hidden_dim == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "embed_dim and hidden_dim must be positive");
  }
  if (!(hp.learning_rate >= 0.0) || !std::isfinite(hp.learning_rate)) {
    throw Error(ErrorCode::kInvalidArgument, "learning_rate must be finite and >= 0");
  }
  if (!(hp.clip_norm > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "clip_norm must be positive");
  }
}

void CheckExamples(const std::vector<TrainingExample>& examples, const char* which) {
  for (std::size_t i = 0; i < examples.size(); ++i) {
    const auto& ex = examples[i];
    if (ex.tokens.empty() || ex.tags.size() != ex.tokens.size()) {
      std::ostringstream msg;
      msg << which << " example " << i << " has " << ex.tokens.size()
          << " tokens and " << ex.tags.size() << " tags";
      throw Error(ErrorCode::kDimensionMismatch, msg.str());
    }
  }
}

struct Encoded {
  std::vector<TokenId> inputs;
  std::vector<int> targets;
  std::size_t tokens = 0;
};

std::vector<Encoded> EncodeAll(const Vocabulary& vocab,
                               const std::vector<TrainingExample>& examples,
                               bool lookahead) {
  std::vector<Encoded> out(examples.size());
  for (std::size_t i = 0; i < examples.size(); ++i) {
    EncodeExample(vocab, examples[i], lookahead, out[i].inputs, out[i].targets);
    out[i].tokens = examples[i].tokens.size();
  }
  return out;
}

void RoundToFloat(LstmParams& params) {
  for (double& v : params.values()) v = static_cast<double>(static_cast<float>(v));
}

}  // namespace

std::vector<double> TaggerModel::Predict(const std::vector<std::string>& tokens) const {
  std::vector<double> out(tokens.size(), 0.0);
  TaggerState state = BeginStream(*this);
  for (const auto& t : tokens) {
    if (auto pred = Consume(*this, state, t)) out[pred->token_index] = pred->p_eos;
  }
  if (auto pred = Flush(*this, state)) out[pred->token_index] = pred->p_eos;
  return out;
}

TaggerState BeginStream(const TaggerModel& model) {
  TaggerState state;
  state.model = &model;
  state.lstm = ZeroState(model.params.dims());
  return state;
}

std::optional<EosPrediction> Consume(const TaggerModel& model, TaggerState& state,
                                     const std::string& token) {
  if (state.model != &model || state.lstm.h.size() != model.params.dims().hidden) {
    throw Error(ErrorCode::kUnknownState, "stream state belongs to a different model");
  }
  const double p = Step(model.params, state.lstm, model.vocab.Lookup(token));
  ++state.tokens_consumed;
  if (!model.lookahead) {
    return EosPrediction{state.tokens_consumed - 1, p};
  }
  const bool had_pending = state.pending_token.has_value();
  state.pending_token = token;
  if (!had_pending) return std::nullopt;
  return EosPrediction{state.tokens_consumed - 2, p};
}

std::optional<EosPrediction> Flush(const TaggerModel& model, TaggerState& state) {
  if (state.model != &model) {
    throw Error(ErrorCode::kUnknownState, "stream state belongs to a different model");
  }
  if (!model.lookahead || !state.pending_token) return std::nullopt;
  const double p = Step(model.params, state.lstm, kPadId);
  state.pending_token.reset();
  return EosPrediction{state.tokens_consumed - 1, p};
}

void EncodeExample(const Vocabulary& vocab, const TrainingExample& example,
                   bool lookahead, std::vector<TokenId>& inputs,
                   std::vector<int>& targets) {
  inputs = vocab.Encode(example.tokens);
  targets.clear();
  if (lookahead) {
    inputs.push_back(kPadId);
    targets.push_back(kNoTarget);
  }
  for (Tag tag : example.tags) targets.push_back(tag == Tag::kEos ? 1 : 0);
}

TagMetrics Evaluate(const TaggerModel& model,
                    const std::vector<TrainingExample>& examples) {
  TagMetrics m;
  std::size_t correct = 0;
  std::size_t tp = 0, fp = 0, fn = 0;
  double loss_sum = 0.0;
  for (const auto& ex : examples) {
    const auto probs = model.Predict(ex.tokens);
    for (std::size_t i = 0; i < probs.size(); ++i) {
      const bool gold = ex.tags[i] == Tag::kEos;
      const bool predicted = probs[i] >= 0.5;
      if (gold == predicted) ++correct;
      if (gold && predicted) ++tp;
      if (!gold && predicted) ++fp;
      if (gold && !predicted) ++fn;
      const double p_gold = gold ? probs[i] : 1.0 - probs[i];
      loss_sum -= std::log(std::max(p_gold, 1e-300));
    }
    m.tokens += probs.size();
  }
  if (m.tokens > 0) {
    m.loss = loss_sum / static_cast<double>(m.tokens);
    m.accuracy = static_cast<double>(correct) / static_cast<double>(m.tokens);
  }
  const std::size_t denom = 2 * tp + fp + fn;
  m.eos_f1 = denom == 0 ? 1.0 : 2.0 * static_cast<double>(tp) / static_cast<double>(denom);
  return m;
}

TrainResult Train(const std::vector<TrainingExample>& train_set,
                  const std::vector<TrainingExample>& heldout_set,
                  const Vocabulary& vocab, const Hyperparams& hyperparams,
                  bool lookahead, std::uint64_t seed) {
  if (train_set.empty()) throw Error(ErrorCode::kEmptyCorpus, "no training examples");
  CheckHyperparams(hyperparams);
  CheckExamples(train_set, "training");
  CheckExamples(heldout_set, "held-out");

  TrainResult result;
  TaggerModel& model = result.model;
  model.vocab = vocab;
  model.hyperparams = hyperparams;
  model.lookahead = lookahead;
  model.seed = seed;
  model.params = LstmParams(LstmDims{vocab.size(), hyperparams.embed_dim,
                                     hyperparams.hidden_dim});
  SeededRng rng(seed);
  InitUniform(model.params, hyperparams.init_scale, rng);

  const auto encoded = EncodeAll(vocab, train_set, lookahead);
  std::vector<std::size_t> order(encoded.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  LstmGradient grad(model.params);
  LstmParams best = model.params;
  double best_f1 = -1.0;
  std::size_t stale = 0;
  const double clip_sq = hyperparams.clip_norm * hyperparams.clip_norm;

  for (std::size_t epoch = 1; epoch <= hyperparams.max_epochs; ++epoch) {
    rng.Shuffle(order);
    double loss_sum = 0.0;
    std::size_t tokens = 0;
    std::size_t hits = 0;
    for (std::size_t idx : order) {
      const Encoded& ex = encoded[idx];
      grad.Clear();
      std::size_t correct = 0;
      const double loss = SequenceLoss(model.params, ex.inputs, ex.targets, &grad, &correct);
      if (!std::isfinite(loss)) {
        std::ostringstream msg;
        msg << "loss became " << loss << " at epoch " << epoch << ", example " << idx
            << " (\"" << train_set[idx].TokenRow() << "\")";
        throw Error(ErrorCode::kNonfiniteLoss, msg.str());
      }
      loss_sum += loss * static_cast<double>(ex.tokens);
      tokens += ex.tokens;
      hits += correct;
      const double norm_sq = grad.SquaredNorm();
      if (norm_sq > clip_sq) grad.Scale(hyperparams.clip_norm / std::sqrt(norm_sq));
      grad.ApplyTo(model.params, -hyperparams.learning_rate);
    }

    EpochRecord record;
    record.epoch = epoch;
    record.train_loss = loss_sum / static_cast<double>(tokens);
    record.train_accuracy = static_cast<double>(hits) / static_cast<double>(tokens);
    if (!heldout_set.empty()) {
      const TagMetrics held = Evaluate(model, heldout_set);
      record.heldout_accuracy = held.accuracy;
      record.heldout_eos_f1 = held.eos_f1;
    }
    result.log.epochs.push_back(record);

    if (heldout_set.empty()) {
      result.log.best_epoch = epoch;
      continue;
    }
    if (record.heldout_eos_f1 > best_f1) {
      best_f1 = record.heldout_eos_f1;
      best = model.params;
      result.log.best_epoch = epoch;
      stale = 0;
    } else if (hyperparams.patience > 0 && ++stale >= hyperparams.patience) {
      result.log.early_stopped = true;
      break;
    }
  }
  if (!heldout_set.empty()) model.params = std::move(best);
  RoundToFloat(model.params);
  return result;
}

}  // namespace lmeos
