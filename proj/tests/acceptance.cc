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

// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "commands.h"
#include "lmeos/corpus.h"
#include "lmeos/fusion.h"
#include "lmeos/io.h"
#include "lmeos/lstm.h"
#include "lmeos/metrics.h"
#include "lmeos/model_io.h"
#include "lmeos/synth.h"
#include "lmeos/tagger.h"
#include "lmeos/vocabulary.h"
#include "test_support.h"

namespace lmeos {
namespace {

// Collects the first few failures of one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string Summary() const {
    std::string out;
    for (const auto& f : failures_) out += "\n    - " + f;
    if (failed_ > failures_.size()) {
      out += "\n    - ... " + std::to_string(failed_ - failures_.size()) + " more";
    }
    return out;
  }

 private:
  std::vector<std::string> failures_;
  std::size_t failed_ = 0;
};

std::string Fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

// 1. Metric oracle.
std::string MetricOracle(Check& check) {
  const auto& rows = testing::PublishedResults();
  double worst_f = 0.0;
  double worst_gain = 0.0;
  double v3_sum = 0.0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& cell = rows[k];
    const double f = FBeta(cell.p, cell.r);
    worst_f = std::max(worst_f, std::abs(f - cell.f));
    check.Expect(std::abs(f - cell.f) <= 0.005,
                 std::string(cell.scenario) + " " + cell.mode + Fmt(" F0.5 %.4f vs %.2f", f, cell.f));
    if (std::isnan(cell.gain)) continue;
    const double gain = RelativeGain(cell.f, rows[k - (k % 3)].f);
    worst_gain = std::max(worst_gain, std::abs(gain - cell.gain));
    check.Expect(std::abs(gain - cell.gain) <= 0.1,
                 std::string(cell.scenario) + " " + cell.mode + Fmt(" gain %.2f vs %.1f", gain, cell.gain));
    if (k % 3 == 2) v3_sum += cell.gain;
  }
  const double mean = v3_sum / 4.0;
  check.Expect(std::abs(mean - 9.8) <= 0.05, Fmt("mean v3 gain %.3f", mean));
  return Fmt("max |dF|=%.4f, max |dgain|=%.2f, mean v3 gain=%.3f%%", worst_f, worst_gain, mean);
}

// 2. Data-factory fidelity through the prepare-data command.
std::string DataFactory(Check& check) {
  testing::TempDir dir;
  const auto corpus = dir.path() / "corpus";
  std::filesystem::create_directories(corpus);
  std::ofstream(corpus / "a.txt")
      << "How is the weather in Seattle? I’m new in town. Wake me up at noon tomorrow.";
  std::ofstream(corpus / "b.txt") << "Wake me up at noon. How did you sleep? I slept well.";

  auto run = [&](std::vector<std::string> args) {
    args.insert(args.begin(), "lmeos");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
    check.Expect(code == 0, "prepare-data exit " + std::to_string(code) + ": " + err.str());
  };

  const std::vector<std::string> table1 = {
      "how is the weather in seattle | O O O O O eos",
      "how is the weather in | O O O O O",
      "i’m new in town | O O O eos",
      "i’m new in | O O O",
      "wake me up at noon tomorrow | O O O O O eos",
      "wake me up at noon | O O O O O",
  };
  const std::vector<std::string> table2 = {
      "how is the weather in seattle i’m | O O O O O eos O",
      "i’m new in town wake | O O O eos O",
      // The printed row lists seven tags for six tokens; the sentence has five
      // tokens, so the boundary tag sits at index 4.
      "wake me up at noon how | O O O O eos O",
  };
  TrainingExample printed;
  printed.tokens = {"wake", "me", "up", "at", "noon", "how"};
  printed.tags = {Tag::kO, Tag::kO, Tag::kO, Tag::kO, Tag::kO, Tag::kEos, Tag::kO};
  printed.variant = ExampleVariant::kLookahead;
  check.Expect(!ValidateExample(printed).empty(), "seven-tag row unexpectedly valid");
  auto rows_of = [](const std::filesystem::path& path) {
    std::vector<std::string> rows;
    for (const auto& ex : ReadExamples(path)) rows.push_back(ex.TokenRow() + " | " + ex.TagRow());
    return rows;
  };

  std::filesystem::create_directories(dir.path() / "only_a");
  std::filesystem::copy_file(corpus / "a.txt", dir.path() / "only_a" / "a.txt");
  run({"prepare-data", (dir.path() / "only_a").string(), dir / "v2.jsonl"});
  const auto v2_rows = rows_of(dir / "v2.jsonl");
  check.Expect(v2_rows == table1, "three-sentence document does not yield exactly the six v2 rows");

  run({"prepare-data", corpus.string(), dir / "v3.jsonl", "--lookahead"});
  const auto v3_rows = rows_of(dir / "v3.jsonl");
  std::size_t found = 0;
  for (const auto& want : table1) {
    const bool hit = std::count(v3_rows.begin(), v3_rows.end(), want) > 0;
    check.Expect(hit, "missing v2 row: " + want);
    found += hit;
  }
  for (const auto& want : table2) {
    const bool hit = std::count(v3_rows.begin(), v3_rows.end(), want) > 0;
    check.Expect(hit, "missing look-ahead row: " + want);
    found += hit;
  }
  return std::to_string(found) + "/9 reference rows matched (row C3 with its length-consistent tag row); " +
         std::to_string(v3_rows.size()) + " rows emitted";
}

// 3. Tagger numerics.
std::string TaggerNumerics(Check& check) {
  LstmParams params(LstmDims{5, 3, 4});
  SeededRng rng(11);
  InitUniform(params, 0.5, rng);
  const std::vector<TokenId> inputs = {2, 3, 4};
  const std::vector<int> targets = {0, 1, 0};
  LstmGradient grad(params);
  SequenceLoss(params, inputs, targets, &grad);
  const auto analytic = grad.Dense();
  double worst = 0.0;
  for (std::size_t k = 0; k < params.size(); ++k) {
    const double saved = params.values()[k];
    params.values()[k] = saved + 1e-4;
    const double up = SequenceLoss(params, inputs, targets, nullptr);
    params.values()[k] = saved - 1e-4;
    const double down = SequenceLoss(params, inputs, targets, nullptr);
    params.values()[k] = saved;
    const double numeric = (up - down) / 2e-4;
    const double scale = std::max(std::abs(numeric) + std::abs(analytic[k]), 1e-7);
    worst = std::max(worst, std::abs(numeric - analytic[k]) / scale);
  }
  check.Expect(worst < 1e-4, Fmt("gradient relative error %.3g", worst));

  double worst_norm = 0.0;
  LstmState state = ZeroState(params.dims());
  for (TokenId id : {2, 4, 1, 3, 0}) {
    const double p = Step(params, state, id);
    const std::size_t H = params.dims().hidden;
    double logit[2] = {params.b_out()[0], params.b_out()[1]};
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t j = 0; j < H; ++j) logit[r] += params.w_out()[r * H + j] * state.h[j];
    }
    const double z = std::exp(logit[0]) + std::exp(logit[1]);
    worst_norm = std::max(worst_norm, std::abs(std::exp(logit[0]) / z + p - 1.0));
  }
  check.Expect(worst_norm < 1e-6, Fmt("softmax normalization error %.3g", worst_norm));

  const std::vector<std::string> probe = {"how", "is", "the", "weather", "in", "seattle"};
  bool stream_ok = true;
  bool io_ok = true;
  testing::TempDir dir;
  for (bool lookahead : {false, true}) {
    const auto rows = testing::ToyRows(lookahead);
    Hyperparams hp = testing::ToyHyperparams();
    hp.max_epochs = 5;
    const TaggerModel model = Train(rows, {}, BuildVocab(rows, 100), hp, lookahead, 1).model;
    std::vector<TokenId> ids = model.vocab.Encode(probe);
    if (lookahead) ids.push_back(kPadId);
    const auto batch = SequenceProbabilities(model.params, ids);
    TaggerState s = BeginStream(model);
    std::vector<double> streamed;
    for (const auto& t : probe) {
      if (auto p = Consume(model, s, t)) streamed.push_back(p->p_eos);
    }
    if (auto p = Flush(model, s)) streamed.push_back(p->p_eos);
    stream_ok &= streamed.size() == probe.size();
    for (std::size_t i = 0; stream_ok && i < streamed.size(); ++i) {
      stream_ok &= std::abs(streamed[i] - batch[i + (lookahead ? 1 : 0)]) < 1e-12;
    }
    SaveModel(model, dir / "m.bin");
    const TaggerModel loaded = LoadModel(dir / "m.bin");
    io_ok &= loaded == model && loaded.Predict(probe) == model.Predict(probe);
  }
  check.Expect(stream_ok, "streaming predictions differ from the batch pass");
  check.Expect(io_ok, "save/load is not bit-exact");
  return Fmt("grad rel err %.2e, softmax err %.1e", worst, worst_norm) +
         (stream_ok ? ", stream==batch" : ", stream!=batch") + (io_ok ? ", round-trip exact" : "");
}

// 4. Overfit sanity.
std::string Overfit(Check& check) {
  const auto sentences = SamplePrefixFreeSentences(50, 4);
  check.Expect(sentences.size() == 50, "could not sample 50 prefix-free sentences");
  std::vector<TrainingExample> rows;
  for (const auto& s : sentences) {
    Sentence sentence;
    sentence.tokens = s.tokens;
    const auto v2 = MakeV2Examples(sentence);
    rows.push_back(v2.full);
    if (v2.truncated) rows.push_back(*v2.truncated);
  }
  const Hyperparams hp;  // embed 32, hidden 64, at most 200 epochs
  const Vocabulary vocab = BuildVocab(rows, hp.max_vocab);
  const auto first = Train(rows, {}, vocab, hp, false, 17);
  const double accuracy = Evaluate(first.model, rows).accuracy;
  check.Expect(first.log.epochs.size() <= 200, "more than 200 epochs");
  check.Expect(accuracy >= 0.99, Fmt("training tag accuracy %.4f", accuracy));
  const auto second = Train(rows, {}, vocab, hp, false, 17);
  check.Expect(second.model == first.model, "second run with the same seed differs");
  return Fmt("%.0f examples, accuracy %.4f after %.0f epochs, repeat run identical", rows.size(),
             accuracy, first.log.epochs.size());
}

// 5. Fusion laws.
std::string FusionLaws(Check& check) {
  const TaggerModel v2 = testing::TrainToy(false);
  const TaggerModel v3 = testing::TrainToy(true);
  std::mt19937_64 rng(4242);
  const int kStreams = 1000;
  for (int k = 0; k < kStreams; ++k) {
    const auto stream = testing::RandomStream(rng);
    const std::string v = testing::FusionLawViolation(stream, testing::RandomPolicy(rng), v2, v3);
    check.Expect(v.empty(), "stream " + std::to_string(k) + ": " + v);
  }
  return std::to_string(kStreams) + " streams x 3 policies x 9 thresholds";
}

// 6. Directional reproduction on a synthetic benchmark.
std::string Benchmark(Check& check) {
  const auto docs = MakeSyntheticDocuments(400, 11);
  const std::vector<RawDocument> train_docs(docs.begin(), docs.end() - 40);
  const std::vector<RawDocument> heldout_docs(docs.end() - 40, docs.end());
  Hyperparams hp;
  hp.max_epochs = 40;
  TaggerModel models[2];
  for (bool lookahead : {false, true}) {
    const auto train = BuildExamples(train_docs, lookahead);
    const auto heldout = BuildExamples(heldout_docs, lookahead);
    models[lookahead] = Train(train, heldout, BuildVocab(train, hp.max_vocab), hp, lookahead, 7).model;
  }
  const auto sentences = SampleHeldOutSentences(400, 99, docs);
  const auto suite = MakeBenchmark(sentences, BenchmarkOptions{}, 2024);
  check.Expect(suite.size() == 200, "benchmark does not hold 200 streams");

  double f[3] = {0, 0, 0};
  for (int m = 0; m < 3; ++m) {
    Policy p;
    p.mode = static_cast<PolicyMode>(m);
    std::size_t tp = 0, fp = 0, fn = 0;
    for (const auto& s : suite) {
      const auto tokens = testing::Words(s.words);
      const TaggerModel* model = m == 0 ? nullptr : &models[m == 2];
      const auto hyp = BoundariesFromSegments(SegmentStream(s.words, p, model).segments, tokens);
      const auto r = Score(hyp, MakeBoundarySet(s.boundaries, tokens.size()));
      tp += r.true_positives;
      fp += r.false_positives;
      fn += r.false_negatives;
    }
    f[m] = ReportFromCounts(tp, fp, fn).f_beta;
  }
  check.Expect(f[1] - f[0] >= 0.02, Fmt("F0.5 v2 - v1 = %.4f", f[1] - f[0]));
  check.Expect(f[2] >= f[1], Fmt("F0.5 v3 %.4f < v2 %.4f", f[2], f[1]));
  return Fmt("F0.5 v1=%.4f v2=%.4f v3=%.4f", f[0], f[1], f[2]);
}

// 7. Endpoint oracle.
std::string EndpointOracle(Check& check) {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> thr_dist(1, 1500);
  const int kStreams = 1000;
  for (int k = 0; k < kStreams; ++k) {
    const auto s = testing::RandomStream(rng, 40);
    const std::int64_t thr = thr_dist(rng);
    const std::int64_t hard = thr + thr_dist(rng);
    const auto got = DetectCandidates(s, thr, hard);
    check.Expect(got == testing::OracleCandidates(s, thr, hard),
                 "stream " + std::to_string(k) + " differs from the gap scan");
    const std::int64_t lower = std::max<std::int64_t>(1, thr - thr_dist(rng));
    const auto wide = testing::TimeoutIndices(DetectCandidates(s, lower, hard));
    const auto narrow = testing::TimeoutIndices(got);
    check.Expect(std::includes(wide.begin(), wide.end(), narrow.begin(), narrow.end()),
                 "stream " + std::to_string(k) + " loses a candidate at a lower threshold");
  }
  return std::to_string(kStreams) + " streams";
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<std::string(Check&)> run;
};

}  // namespace
}  // namespace lmeos

int main() {
  using namespace lmeos;
  const std::vector<Criterion> criteria = {
      {1, "metric oracle", 1.0, MetricOracle},
      {2, "data-factory fidelity", 1.0, DataFactory},
      {3, "tagger numerics", 10.0, TaggerNumerics},
      {4, "overfit sanity", 120.0, Overfit},
      {5, "fusion laws", 60.0, FusionLaws},
      {6, "directional benchmark", 600.0, Benchmark},
      {7, "endpoint oracle", 10.0, EndpointOracle},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.run(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.Expect(seconds < c.budget_s, "took " + std::to_string(seconds) + " s");
    const bool ok = check.ok();
    failed += ok ? 0 : 1;
    std::printf("%s criterion %d (%s): %s [%.2fs]%s\n", ok ? "PASS" : "FAIL", c.id, c.name,
                detail.c_str(), seconds, check.Summary().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
