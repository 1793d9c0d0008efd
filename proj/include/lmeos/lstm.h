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

#ifndef LMEOS_LSTM_H_
#define LMEOS_LSTM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "lmeos/vocabulary.h"

namespace lmeos {

struct LstmDims {
  std::size_t vocab = 0;
  std::size_t embed = 0;
  std::size_t hidden = 0;

  bool operator==(const LstmDims&) const = default;
};

// Parameters of a single-layer LSTM tagger with a two-way softmax head,
// stored as one flat buffer in this order:
//
//   embedding  vocab x embed
//   w_x        4*hidden x embed     gates stacked as input, forget, cell, output
//   w_h        4*hidden x hidden
//   b          4*hidden
//   w_out      2 x hidden           row 0 = O, row 1 = EOS
//   b_out      2
//
// All matrices are row-major. The model file stores the same order.
class LstmParams {
 public:
  LstmParams() = default;
  explicit LstmParams(LstmDims dims);

  const LstmDims& dims() const { return dims_; }
  std::size_t size() const { return values_.size(); }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  std::size_t embedding_offset() const { return 0; }
  std::size_t w_x_offset() const { return dims_.vocab * dims_.embed; }
  std::size_t w_h_offset() const { return w_x_offset() + 4 * dims_.hidden * dims_.embed; }
  std::size_t b_offset() const { return w_h_offset() + 4 * dims_.hidden * dims_.hidden; }
  std::size_t w_out_offset() const { return b_offset() + 4 * dims_.hidden; }
  std::size_t b_out_offset() const { return w_out_offset() + 2 * dims_.hidden; }

  const double* embedding_row(TokenId id) const {
    return values_.data() + static_cast<std::size_t>(id) * dims_.embed;
  }
  const double* w_x() const { return values_.data() + w_x_offset(); }
  const double* w_h() const { return values_.data() + w_h_offset(); }
  const double* b() const { return values_.data() + b_offset(); }
  const double* w_out() const { return values_.data() + w_out_offset(); }
  const double* b_out() const { return values_.data() + b_out_offset(); }

  bool operator==(const LstmParams&) const = default;

 private:
  LstmDims dims_;
  std::vector<double> values_;
};

// Deterministic source for initialisation and shuffling. mt19937_64 output
// is fully specified by the standard; the distributions on top of it are
// implemented here so results do not depend on the standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // [0, 1)
  double Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  // [0, n)
  std::size_t Below(std::size_t n) { return static_cast<std::size_t>(Next() % n); }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

void InitUniform(LstmParams& params, double scale, SeededRng& rng);

// Recurrent state between steps.
struct LstmState {
  std::vector<double> h;
  std::vector<double> c;

  bool operator==(const LstmState&) const = default;
};

LstmState ZeroState(const LstmDims& dims);

// Advances `state` by one input token and returns P(EOS) from the head.
double Step(const LstmParams& params, LstmState& state, TokenId input);

// Gradient with dense storage for everything except the embedding, which is
// kept as a short list of touched rows.
class LstmGradient {
 public:
  explicit LstmGradient(const LstmParams& params);

  void Clear();
  double SquaredNorm() const;
  void Scale(double factor);
  // params += step * gradient
  void ApplyTo(LstmParams& params, double step) const;
  // Full-size dense copy, in parameter order.
  std::vector<double> Dense() const;

  double* Row(TokenId id);
  std::span<double> dense() { return dense_; }

 private:
  LstmDims dims_;
  std::size_t dense_offset_ = 0;
  std::vector<double> dense_;  // parameters after the embedding block
  std::vector<std::pair<TokenId, std::vector<double>>> rows_;
};

// Per-step supervision: -1 means the step's output is ignored.
inline constexpr int kNoTarget = -1;

// Mean cross-entropy over targeted steps of the sequence, starting from the
// zero state. When `grad` is non-null the analytic gradient of that mean is
// added to it. `correct` (optional) receives the number of targeted steps
// whose argmax matched.
double SequenceLoss(const LstmParams& params, std::span<const TokenId> inputs,
                    std::span<const int> targets, LstmGradient* grad,
                    std::size_t* correct = nullptr);

// Outputs P(EOS) for every step of the sequence from the zero state.
std::vector<double> SequenceProbabilities(const LstmParams& params,
                                          std::span<const TokenId> inputs);

}  // namespace lmeos

#endif  // LMEOS_LSTM_H_
