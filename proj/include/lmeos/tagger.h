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

#ifndef LMEOS_TAGGER_H_
#define LMEOS_TAGGER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lmeos/corpus.h"
#include "lmeos/lstm.h"
#include "lmeos/vocabulary.h"

namespace lmeos {

struct Hyperparams {
  std::size_t embed_dim = 32;
  std::size_t hidden_dim = 64;
  std::size_t max_vocab = 5000;
  std::size_t min_frequency = 1;
  double learning_rate = 0.1;
  double clip_norm = 5.0;
  double init_scale = 0.1;
  std::size_t max_epochs = 200;
  // Epochs without held-out EOS-F1 improvement before stopping.
  std::size_t patience = 5;

  bool operator==(const Hyperparams&) const = default;
};

// The language-model end-of-segment tagger. Immutable once trained or loaded;
// any number of streams may share one instance.
struct TaggerModel {
  Vocabulary vocab;
  Hyperparams hyperparams;
  bool lookahead = false;
  std::uint64_t seed = 0;
  LstmParams params;

  // Feeds tokens one at a time and returns P(EOS) per token, flushing the
  // look-ahead delay at the end. Equivalent to a Consume()/Flush() loop.
  std::vector<double> Predict(const std::vector<std::string>& tokens) const;

  bool operator==(const TaggerModel&) const = default;
};

// Per-stream inference state; single owner.
struct TaggerState {
  const TaggerModel* model = nullptr;
  LstmState lstm;
  std::size_t tokens_consumed = 0;
  std::optional<std::string> pending_token;  // look-ahead mode only
};

struct EosPrediction {
  std::size_t token_index = 0;
  double p_eos = 0.0;
};

TaggerState BeginStream(const TaggerModel& model);

// Without look-ahead: the prediction for the token just consumed. With
// look-ahead: the prediction for the previous token, or nothing on the
// first call. Throws Error(kUnknownState) if `state` was begun on another
// model.
std::optional<EosPrediction> Consume(const TaggerModel& model, TaggerState& state,
                                     const std::string& token);

// Look-ahead mode with a pending token: its prediction, using PAD as the
// missing successor. Otherwise nothing.
std::optional<EosPrediction> Flush(const TaggerModel& model, TaggerState& state);

struct EpochRecord {
  std::size_t epoch = 0;
  double train_loss = 0.0;
  double train_accuracy = 0.0;
  double heldout_accuracy = 0.0;
  double heldout_eos_f1 = 0.0;
};

struct TrainingLog {
  std::vector<EpochRecord> epochs;
  std::size_t best_epoch = 0;
  bool early_stopped = false;
};

struct TagMetrics {
  double loss = 0.0;
  double accuracy = 0.0;
  double eos_f1 = 0.0;
  std::size_t tokens = 0;
};

// Input ids and per-step targets for one example: the look-ahead model reads
// an extra PAD step, and its output at step t labels token t-1.
void EncodeExample(const Vocabulary& vocab, const TrainingExample& example,
                   bool lookahead, std::vector<TokenId>& inputs,
                   std::vector<int>& targets);

TagMetrics Evaluate(const TaggerModel& model,
                    const std::vector<TrainingExample>& examples);

struct TrainResult {
  TaggerModel model;
  TrainingLog log;
};

// Per-example SGD over a seeded shuffle, with global-norm clipping. Keeps
// the parameters of the epoch with the best held-out EOS-F1 and stops after
// `patience` epochs without improvement; with an empty held-out set it runs
// all max_epochs and keeps the final parameters. Parameters of the returned
// model are rounded to float so they survive the model file exactly.
//
// Throws Error(kDimensionMismatch) for misaligned examples and
// Error(kNonfiniteLoss) if the loss diverges.
TrainResult Train(const std::vector<TrainingExample>& train_set,
                  const std::vector<TrainingExample>& heldout_set,
                  const Vocabulary& vocab, const Hyperparams& hyperparams,
                  bool lookahead, std::uint64_t seed);

}  // namespace lmeos

#endif  // LMEOS_TAGGER_H_
