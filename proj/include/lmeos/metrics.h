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

#ifndef LMEOS_METRICS_H_
#define LMEOS_METRICS_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lmeos/fusion.h"

namespace lmeos {

// Inter-token boundaries: index i means "boundary after token i". The
// stream-end boundary is never a member.
struct BoundarySet {
  std::set<std::size_t> indices;
  std::size_t total_tokens = 0;

  bool operator==(const BoundarySet&) const = default;
};

// Builds a set from raw indices, dropping the stream-end index. Throws
// Error(kInvalidArgument) for indices past the end.
BoundarySet MakeBoundarySet(const std::vector<std::size_t>& indices,
                            std::size_t total_tokens);

inline constexpr double kDefaultBeta = 0.5;

struct SegmentationReport {
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
  double precision = 1.0;
  double recall = 1.0;
  double f_beta = 1.0;
  double beta = kDefaultBeta;
};

// (1 + b^2) P R / (b^2 P + R), and 0 when P = R = 0.
double FBeta(double precision, double recall, double beta = kDefaultBeta);

// Precision and recall default to 1 when their denominator is zero.
SegmentationReport ReportFromCounts(std::size_t tp, std::size_t fp, std::size_t fn,
                                    double beta = kDefaultBeta);

// Exact index matching. Throws Error(kLengthMismatch) when the two sets
// describe streams of different length.
SegmentationReport Score(const BoundarySet& hyp, const BoundarySet& ref,
                         double beta = kDefaultBeta);

// Percentage change of f_new over f_base. Throws Error(kZeroBaseline) when
// f_base <= 0.
double RelativeGain(double f_new, double f_base);

// Round half away from zero to `decimals` places, as printed in reports.
double RoundTo(double value, int decimals);

// Throws Error(kTokenMismatch) unless the segments tile `reference_tokens`.
BoundarySet BoundariesFromSegments(const std::vector<Segment>& segments,
                                   const std::vector<std::string>& reference_tokens);

enum class EditOp { kMatch, kSubstitute, kDelete, kInsert };

struct Alignment {
  std::size_t distance = 0;
  // Operations from the start of both sequences. kDelete consumes a
  // reference token only, kInsert a hypothesis token only.
  std::vector<EditOp> ops;
  // For every hypothesis token, the aligned reference index or -1.
  std::vector<long> hyp_to_ref;
};

// Minimum edit distance (unit costs) with a traceback that, walking from the
// end, prefers match, then substitution, deletion and insertion.
Alignment AlignTokens(const std::vector<std::string>& hyp,
                      const std::vector<std::string>& ref);

// Moves hypothesis boundaries onto the reference: the boundary after
// hypothesis token h lands after the last reference token consumed by the
// alignment up to and including h.
BoundarySet ProjectBoundaries(const BoundarySet& hyp, const Alignment& alignment,
                              std::size_t ref_tokens);

// Table rendering, e.g.
//   model   P     R     F0.5  F0.5-gain
//   v1      0.60  0.81  0.63
struct ReportRow {
  std::string label;
  SegmentationReport report;
  std::optional<double> gain;
};

std::string FormatReportTable(const std::vector<ReportRow>& rows);
std::string ReportJson(const SegmentationReport& report);

}  // namespace lmeos

#endif  // LMEOS_METRICS_H_
