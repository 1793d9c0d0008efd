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

#include <doctest.h>

#include <chrono>
#include <limits>
#include <random>
#include <vector>

#include "lmeos/endpoint.h"
#include "lmeos/error.h"
#include "test_support.h"

namespace lmeos {
namespace {

using testing::OracleCandidates;
using testing::TimeoutIndices;

TEST_CASE("gap above the threshold fires a timeout") {
  const std::vector<WordEvent> s = {{"a", 0, 300}, {"b", 900, 1200}};
  const auto c = DetectCandidates(s, 500, 2000);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == EndpointCandidate{0, 600, 800, CandidateKind::kTimeout});
  CHECK(c[1] == EndpointCandidate{1, 0, 1200, CandidateKind::kStreamEnd});
}

TEST_CASE("gap below the threshold only ends the stream") {
  const std::vector<WordEvent> s = {{"a", 0, 300}, {"b", 600, 900}};
  const auto c = DetectCandidates(s, 500, 2000);
  REQUIRE(c.size() == 1);
  CHECK(c[0].kind == CandidateKind::kStreamEnd);
  CHECK(c[0].after_token_index == 1);
}

TEST_CASE("scripted gaps match the brute-force scan") {
  const std::vector<std::int64_t> gaps = {100, 600, 200, 700, 500, 499, 2500, 0, 2000};
  std::vector<WordEvent> s;
  std::int64_t t = 0;
  for (std::size_t i = 0; i <= gaps.size(); ++i) {
    s.push_back({"w", t, t + 250});
    t += 250 + (i < gaps.size() ? gaps[i] : 0);
  }
  REQUIRE(s.size() == 10);
  const auto got = DetectCandidates(s, 500, 2000);
  CHECK(got == OracleCandidates(s, 500, 2000));
  CHECK(TimeoutIndices(got) == std::set<std::size_t>{1, 3, 4, 6, 8});
}

TEST_CASE("leading silence and an empty stream produce nothing extra") {
  CHECK(DetectCandidates({}, 500, 2000).empty());
  const auto c = DetectCandidates({{"late", 5000, 5200}}, 500, 2000);
  REQUIRE(c.size() == 1);
  CHECK(c[0].kind == CandidateKind::kStreamEnd);
}

ErrorCode DetectError(const std::vector<WordEvent>& s, std::int64_t thr = 500,
                      std::int64_t hard = 2000) {
  try {
    DetectCandidates(s, thr, hard);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kParseError;
}

TEST_CASE("malformed streams and thresholds are rejected") {
  CHECK(DetectError({{"a", 500, 800}, {"b", 100, 200}}) == ErrorCode::kUnsortedStream);
  CHECK(DetectError({{"a", 0, 800}, {"b", 700, 900}}) == ErrorCode::kOverlappingEvents);
  CHECK(DetectError({{"a", 10, 10}}) == ErrorCode::kInvalidArgument);
  CHECK(DetectError({{"a", 0, 10}}, 0, 100) == ErrorCode::kInvalidArgument);
  CHECK(DetectError({{"a", 0, 10}}, 600, 500) == ErrorCode::kInvalidArgument);
}

TEST_CASE("random streams: oracle agreement, ordering and monotonicity") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> thr_dist(1, 1500);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = testing::RandomStream(rng);
    const std::int64_t thr = thr_dist(rng);
    const std::int64_t hard = thr + thr_dist(rng);
    const auto got = DetectCandidates(s, thr, hard);
    REQUIRE(got == OracleCandidates(s, thr, hard));
    for (std::size_t k = 1; k < got.size(); ++k) {
      CHECK(got[k - 1].fired_at_ms <= got[k].fired_at_ms);
    }
    for (const auto& c : got) {
      CHECK(c.silence_ms >= 0);
      CHECK(c.fired_at_ms >= s[c.after_token_index].end_ms);
    }
    const std::int64_t lower = std::max<std::int64_t>(1, thr - thr_dist(rng) / 3);
    const auto wide = TimeoutIndices(DetectCandidates(s, lower, hard));
    for (std::size_t i : TimeoutIndices(got)) CHECK(wide.count(i) == 1);
  }
}

TEST_CASE("replay delivers in order at scripted times") {
  using Clock = std::chrono::steady_clock;
  const std::vector<WordEvent> s = {{"a", 0, 60}, {"b", 100, 150}, {"c", 200, 240}};
  StreamReplayer replay(s, 1.0);
  const auto origin = Clock::now();
  for (const auto& expected : s) {
    const auto got = replay.Next();
    REQUIRE(got);
    CHECK(*got == expected);
    const double at_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - origin).count();
    CHECK(std::abs(at_ms - static_cast<double>(expected.end_ms)) <= 20.0);
  }
  CHECK(replay.done());
  CHECK_FALSE(replay.Next());
}

TEST_CASE("infinite speed and empty streams complete immediately") {
  using Clock = std::chrono::steady_clock;
  std::vector<WordEvent> s;
  for (int i = 0; i < 50; ++i) s.push_back({"w", i * 1000, i * 1000 + 500});
  StreamReplayer fast(s, std::numeric_limits<double>::infinity());
  const auto start = Clock::now();
  std::size_t n = 0;
  while (auto e = fast.Next()) CHECK(*e == s[n++]);
  CHECK(n == s.size());
  CHECK(Clock::now() - start < std::chrono::milliseconds(50));

  StreamReplayer empty({}, 1.0);
  CHECK(empty.done());
  CHECK_FALSE(empty.Next());
  CHECK_THROWS_AS(StreamReplayer({}, 0.0), Error);
}

}  // namespace
}  // namespace lmeos
