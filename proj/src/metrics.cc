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

#include "lmeos/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "lmeos/error.h"

namespace lmeos {

BoundarySet MakeBoundarySet(const std::vector<std::size_t>& indices,
                            std::size_t total_tokens) {
  BoundarySet set;
  set.total_tokens = total_tokens;
  for (std::size_t i : indices) {
    if (i >= total_tokens) {
      throw Error(ErrorCode::kInvalidArgument,
                  "boundary " + std::to_string(i) + " outside a stream of " +
                      std::to_string(total_tokens) + " tokens");
    }
    if (i + 1 == total_tokens) continue;
    set.indices.insert(i);
  }
  return set;
}

double FBeta(double precision, double recall, double beta) {
  const double b2 = beta * beta;
  const double denom = b2 * precision + recall;
  if (denom <= 0.0) return 0.0;
  return (1.0 + b2) * precision * recall / denom;
}

SegmentationReport ReportFromCounts(std::size_t tp, std::size_t fp, std::size_t fn,
                                    double beta) {
  SegmentationReport r;
  r.true_positives = tp;
  r.false_positives = fp;
  r.false_negatives = fn;
  r.beta = beta;
  r.precision = tp + fp == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
  r.recall = tp + fn == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
  r.f_beta = FBeta(r.precision, r.recall, beta);
  return r;
}

SegmentationReport Score(const BoundarySet& hyp, const BoundarySet& ref, double beta) {
  if (hyp.total_tokens != ref.total_tokens) {
    throw Error(ErrorCode::kLengthMismatch,
                "hypothesis has " + std::to_string(hyp.total_tokens) +
                    " tokens, reference " + std::to_string(ref.total_tokens));
  }
  std::size_t tp = 0;
  for (std::size_t i : hyp.indices) tp += ref.indices.count(i);
  return ReportFromCounts(tp, hyp.indices.size() - tp, ref.indices.size() - tp, beta);
}

double RelativeGain(double f_new, double f_base) {
  if (!(f_base > 0.0)) {
    throw Error(ErrorCode::kZeroBaseline, "baseline F must be positive");
  }
  return 100.0 * (f_new - f_base) / f_base;
}

double RoundTo(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  // Relative nudge so decimal halves stored just below .5 still round up.
  return std::round(value * scale * (1.0 + 1e-12)) / scale;
}

BoundarySet BoundariesFromSegments(const std::vector<Segment>& segments,
                                   const std::vector<std::string>& reference_tokens) {
  std::vector<std::size_t> indices;
  std::size_t pos = 0;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    for (const auto& w : segments[k].words) {
      if (pos >= reference_tokens.size() || reference_tokens[pos] != w.word) {
        throw Error(ErrorCode::kTokenMismatch,
                    "segment " + std::to_string(k) + " disagrees with the reference at token " +
                        std::to_string(pos));
      }
      ++pos;
    }
    if (k + 1 < segments.size() && !segments[k].words.empty()) indices.push_back(pos - 1);
  }
  if (pos != reference_tokens.size()) {
    throw Error(ErrorCode::kTokenMismatch,
                "segments cover " + std::to_string(pos) + " of " +
                    std::to_string(reference_tokens.size()) + " reference tokens");
  }
  return MakeBoundarySet(indices, reference_tokens.size());
}

Alignment AlignTokens(const std::vector<std::string>& hyp,
                      const std::vector<std::string>& ref) {
  const std::size_t H = hyp.size();
  const std::size_t R = ref.size();
  std::vector<std::size_t> d((H + 1) * (R + 1));
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return d[i * (R + 1) + j]; };
  for (std::size_t i = 0; i <= H; ++i) at(i, 0) = i;
  for (std::size_t j = 0; j <= R; ++j) at(0, j) = j;
  for (std::size_t i = 1; i <= H; ++i) {
    for (std::size_t j = 1; j <= R; ++j) {
      const std::size_t diag = at(i - 1, j - 1) + (hyp[i - 1] == ref[j - 1] ? 0 : 1);
      at(i, j) = std::min({diag, at(i, j - 1) + 1, at(i - 1, j) + 1});
    }
  }

  Alignment out;
  out.distance = at(H, R);
  std::size_t i = H;
  std::size_t j = R;
  while (i > 0 || j > 0) {
    const std::size_t here = at(i, j);
    if (i > 0 && j > 0 && hyp[i - 1] == ref[j - 1] && at(i - 1, j - 1) == here) {
      out.ops.push_back(EditOp::kMatch);
      --i;
      --j;
    } else if (i > 0 && j > 0 && hyp[i - 1] != ref[j - 1] && at(i - 1, j - 1) + 1 == here) {
      out.ops.push_back(EditOp::kSubstitute);
      --i;
      --j;
    } else if (j > 0 && at(i, j - 1) + 1 == here) {
      out.ops.push_back(EditOp::kDelete);
      --j;
    } else {
      out.ops.push_back(EditOp::kInsert);
      --i;
    }
  }
  std::reverse(out.ops.begin(), out.ops.end());

  out.hyp_to_ref.assign(H, -1);
  std::size_t hi = 0;
  std::size_t ri = 0;
  for (EditOp op : out.ops) {
    switch (op) {
      case EditOp::kMatch:
      case EditOp::kSubstitute:
        out.hyp_to_ref[hi++] = static_cast<long>(ri++);
        break;
      case EditOp::kDelete:
        ++ri;
        break;
      case EditOp::kInsert:
        ++hi;
        break;
    }
  }
  return out;
}

BoundarySet ProjectBoundaries(const BoundarySet& hyp, const Alignment& alignment,
                              std::size_t ref_tokens) {
  std::vector<std::size_t> consumed(hyp.total_tokens, 0);
  std::size_t hi = 0;
  std::size_t ri = 0;
  for (EditOp op : alignment.ops) {
    if (op != EditOp::kInsert) ++ri;
    if (op != EditOp::kDelete) {
      if (hi < consumed.size()) consumed[hi] = ri;
      ++hi;
    }
  }
  std::vector<std::size_t> indices;
  for (std::size_t h : hyp.indices) {
    if (h >= consumed.size() || consumed[h] == 0) continue;
    indices.push_back(consumed[h] - 1);
  }
  return MakeBoundarySet(indices, ref_tokens);
}

std::string FormatReportTable(const std::vector<ReportRow>& rows) {
  std::size_t label_width = 5;
  for (const auto& row : rows) label_width = std::max(label_width, row.label.size());
  std::ostringstream out;
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%-*s  %5s  %5s  %5s  %9s  %5s  %5s  %5s\n",
                static_cast<int>(label_width), "model", "P", "R", "F0.5", "F0.5-gain",
                "TP", "FP", "FN");
  out << buf;
  for (const auto& row : rows) {
    std::string gain;
    if (row.gain) {
      char g[32];
      std::snprintf(g, sizeof(g), "%.1f%%", RoundTo(*row.gain, 1));
      gain = g;
    }
    std::snprintf(buf, sizeof(buf), "%-*s  %5.2f  %5.2f  %5.2f  %9s  %5zu  %5zu  %5zu\n",
                  static_cast<int>(label_width), row.label.c_str(),
                  RoundTo(row.report.precision, 2), RoundTo(row.report.recall, 2),
                  RoundTo(row.report.f_beta, 2), gain.c_str(), row.report.true_positives,
                  row.report.false_positives, row.report.false_negatives);
    out << buf;
  }
  return out.str();
}

std::string ReportJson(const SegmentationReport& report) {
  nlohmann::ordered_json j;
  j["precision"] = report.precision;
  j["recall"] = report.recall;
  j["f05"] = report.f_beta;
  j["tp"] = report.true_positives;
  j["fp"] = report.false_positives;
  j["fn"] = report.false_negatives;
  return j.dump();
}

}  // namespace lmeos
