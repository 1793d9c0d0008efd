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

#include "lmeos/lstm.h"

#include <algorithm>
#include <cmath>

#include "lmeos/error.h"

namespace lmeos {
namespace {

double Sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// Numerically stable two-way softmax; returns P(class 1).
double EosProbability(double logit_o, double logit_eos) {
  return Sigmoid(logit_eos - logit_o);
}

struct StepCache {
  TokenId input = kPadId;
  std::vector<double> gates;  // i, f, g, o after nonlinearity (4H)
  std::vector<double> c_prev;
  std::vector<double> h_prev;
  std::vector<double> c;
  std::vector<double> tanh_c;
  std::vector<double> h;
  double p_eos = 0.0;
};

// Forward step writing everything backward needs into `cache`.
void Forward(const LstmParams& p, const LstmState& prev, TokenId input,
             StepCache& cache) {
  const std::size_t E = p.dims().embed;
  const std::size_t H = p.dims().hidden;
  cache.input = input;
  cache.h_prev = prev.h;
  cache.c_prev = prev.c;
  cache.gates.assign(4 * H, 0.0);
  const double* x = p.embedding_row(input);
  const double* wx = p.w_x();
  const double* wh = p.w_h();
  const double* b = p.b();
  for (std::size_t r = 0; r < 4 * H; ++r) {
    double z = b[r];
    const double* wx_row = wx + r * E;
    for (std::size_t k = 0; k < E; ++k) z += wx_row[k] * x[k];
    const double* wh_row = wh + r * H;
    for (std::size_t k = 0; k < H; ++k) z += wh_row[k] * prev.h[k];
    cache.gates[r] = (r >= 2 * H && r < 3 * H) ? std::tanh(z) : Sigmoid(z);
  }
  cache.c.resize(H);
  cache.tanh_c.resize(H);
  cache.h.resize(H);
  for (std::size_t j = 0; j < H; ++j) {
    const double i = cache.gates[j];
    const double f = cache.gates[H + j];
    const double g = cache.gates[2 * H + j];
    const double o = cache.gates[3 * H + j];
    cache.c[j] = f * prev.c[j] + i * g;
    cache.tanh_c[j] = std::tanh(cache.c[j]);
    cache.h[j] = o * cache.tanh_c[j];
  }
  const double* wo = p.w_out();
  const double* bo = p.b_out();
  double logit_o = bo[0];
  double logit_eos = bo[1];
  for (std::size_t j = 0; j < H; ++j) {
    logit_o += wo[j] * cache.h[j];
    logit_eos += wo[H + j] * cache.h[j];
  }
  cache.p_eos = EosProbability(logit_o, logit_eos);
}

}  // namespace

LstmParams::LstmParams(LstmDims dims) : dims_(dims) {
  if (dims.vocab < 2 || dims.embed == 0 || dims.hidden == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "LSTM dimensions must be positive");
  }
  const std::size_t total = dims.vocab * dims.embed + 4 * dims.hidden * dims.embed +
                            4 * dims.hidden * dims.hidden + 4 * dims.hidden +
                            2 * dims.hidden + 2;
  values_.assign(total, 0.0);
}

void InitUniform(LstmParams& params, double scale, SeededRng& rng) {
  for (double& v : params.values()) v = rng.Uniform(-scale, scale);
}

LstmState ZeroState(const LstmDims& dims) {
  return LstmState{std::vector<double>(dims.hidden, 0.0),
                   std::vector<double>(dims.hidden, 0.0)};
}

double Step(const LstmParams& params, LstmState& state, TokenId input) {
  if (input < 0 || static_cast<std::size_t>(input) >= params.dims().vocab) {
    throw Error(ErrorCode::kDimensionMismatch, "token id outside vocabulary");
  }
  StepCache cache;
  Forward(params, state, input, cache);
  state.h = std::move(cache.h);
  state.c = std::move(cache.c);
  return cache.p_eos;
}

LstmGradient::LstmGradient(const LstmParams& params)
    : dims_(params.dims()),
      dense_offset_(params.w_x_offset()),
      dense_(params.size() - params.w_x_offset(), 0.0) {}

void LstmGradient::Clear() {
  std::fill(dense_.begin(), dense_.end(), 0.0);
  rows_.clear();
}

double* LstmGradient::Row(TokenId id) {
  for (auto& [row_id, row] : rows_) {
    if (row_id == id) return row.data();
  }
  rows_.emplace_back(id, std::vector<double>(dims_.embed, 0.0));
  return rows_.back().second.data();
}

double LstmGradient::SquaredNorm() const {
  double sum = 0.0;
  for (double v : dense_) sum += v * v;
  for (const auto& [id, row] : rows_) {
    for (double v : row) sum += v * v;
  }
  return sum;
}

void LstmGradient::Scale(double factor) {
  for (double& v : dense_) v *= factor;
  for (auto& [id, row] : rows_) {
    for (double& v : row) v *= factor;
  }
}

void LstmGradient::ApplyTo(LstmParams& params, double step) const {
  auto values = params.values();
  for (std::size_t k = 0; k < dense_.size(); ++k) {
    values[dense_offset_ + k] += step * dense_[k];
  }
  for (const auto& [id, row] : rows_) {
    double* target = values.data() + static_cast<std::size_t>(id) * dims_.embed;
    for (std::size_t k = 0; k < dims_.embed; ++k) target[k] += step * row[k];
  }
}

std::vector<double> LstmGradient::Dense() const {
  std::vector<double> out(dense_offset_ + dense_.size(), 0.0);
  std::copy(dense_.begin(), dense_.end(), out.begin() + dense_offset_);
  for (const auto& [id, row] : rows_) {
    std::copy(row.begin(), row.end(),
              out.begin() + static_cast<std::size_t>(id) * dims_.embed);
  }
  return out;
}

double SequenceLoss(const LstmParams& params, std::span<const TokenId> inputs,
                    std::span<const int> targets, LstmGradient* grad,
                    std::size_t* correct) {
  if (inputs.size() != targets.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "inputs and targets differ in length");
  }
  const LstmDims& dims = params.dims();
  const std::size_t T = inputs.size();
  const std::size_t E = dims.embed;
  const std::size_t H = dims.hidden;
  for (TokenId id : inputs) {
    if (id < 0 || static_cast<std::size_t>(id) >= dims.vocab) {
      throw Error(ErrorCode::kDimensionMismatch, "token id outside vocabulary");
    }
  }

  std::vector<StepCache> caches(T);
  LstmState state = ZeroState(dims);
  std::size_t targeted = 0;
  for (std::size_t t = 0; t < T; ++t) {
    Forward(params, state, inputs[t], caches[t]);
    state.h = caches[t].h;
    state.c = caches[t].c;
    if (targets[t] != kNoTarget) ++targeted;
  }
  if (targeted == 0) return 0.0;

  double loss = 0.0;
  std::size_t hits = 0;
  for (std::size_t t = 0; t < T; ++t) {
    if (targets[t] == kNoTarget) continue;
    const double p = caches[t].p_eos;
    const double p_target = targets[t] == 1 ? p : 1.0 - p;
    loss -= std::log(std::max(p_target, 1e-300));
    if ((p >= 0.5) == (targets[t] == 1)) ++hits;
  }
  loss /= static_cast<double>(targeted);
  if (correct) *correct = hits;
  if (grad == nullptr) return loss;

  const double inv = 1.0 / static_cast<double>(targeted);
  auto dense = grad->dense();
  const std::size_t off_wx = 0;
  const std::size_t off_wh = params.w_h_offset() - params.w_x_offset();
  const std::size_t off_b = params.b_offset() - params.w_x_offset();
  const std::size_t off_wo = params.w_out_offset() - params.w_x_offset();
  const std::size_t off_bo = params.b_out_offset() - params.w_x_offset();
  const double* wx = params.w_x();
  const double* wh = params.w_h();
  const double* wo = params.w_out();

  std::vector<double> dh_next(H, 0.0);
  std::vector<double> dc_next(H, 0.0);
  std::vector<double> dh(H);
  std::vector<double> dz(4 * H);
  for (std::size_t t = T; t-- > 0;) {
    const StepCache& k = caches[t];
    dh = dh_next;
    if (targets[t] != kNoTarget) {
      // d(-log softmax)/dlogits = p - onehot
      const double p_eos = k.p_eos;
      const double d_eos = (p_eos - (targets[t] == 1 ? 1.0 : 0.0)) * inv;
      const double d_o = -d_eos;
      dense[off_bo] += d_o;
      dense[off_bo + 1] += d_eos;
      for (std::size_t j = 0; j < H; ++j) {
        dense[off_wo + j] += d_o * k.h[j];
        dense[off_wo + H + j] += d_eos * k.h[j];
        dh[j] += wo[j] * d_o + wo[H + j] * d_eos;
      }
    }
    for (std::size_t j = 0; j < H; ++j) {
      const double i = k.gates[j];
      const double f = k.gates[H + j];
      const double g = k.gates[2 * H + j];
      const double o = k.gates[3 * H + j];
      const double dc = dh[j] * o * (1.0 - k.tanh_c[j] * k.tanh_c[j]) + dc_next[j];
      dz[j] = dc * g * i * (1.0 - i);
      dz[H + j] = dc * k.c_prev[j] * f * (1.0 - f);
      dz[2 * H + j] = dc * i * (1.0 - g * g);
      dz[3 * H + j] = dh[j] * k.tanh_c[j] * o * (1.0 - o);
      dc_next[j] = dc * f;
    }
    const double* x = params.embedding_row(k.input);
    double* dx = grad->Row(k.input);
    std::fill(dh_next.begin(), dh_next.end(), 0.0);
    for (std::size_t r = 0; r < 4 * H; ++r) {
      const double d = dz[r];
      if (d == 0.0) continue;
      dense[off_b + r] += d;
      double* dwx_row = dense.data() + off_wx + r * E;
      const double* wx_row = wx + r * E;
      for (std::size_t m = 0; m < E; ++m) {
        dwx_row[m] += d * x[m];
        dx[m] += d * wx_row[m];
      }
      double* dwh_row = dense.data() + off_wh + r * H;
      const double* wh_row = wh + r * H;
      for (std::size_t m = 0; m < H; ++m) {
        dwh_row[m] += d * k.h_prev[m];
        dh_next[m] += d * wh_row[m];
      }
    }
  }
  return loss;
}

std::vector<double> SequenceProbabilities(const LstmParams& params,
                                          std::span<const TokenId> inputs) {
  std::vector<double> out;
  out.reserve(inputs.size());
  LstmState state = ZeroState(params.dims());
  for (TokenId id : inputs) out.push_back(Step(params, state, id));
  return out;
}

}  // namespace lmeos
