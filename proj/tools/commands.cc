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

#include "commands.h"

#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "config.h"
#include "lmeos/corpus.h"
#include "lmeos/error.h"
#include "lmeos/fusion.h"
#include "lmeos/io.h"
#include "lmeos/metrics.h"
#include "lmeos/model_io.h"
#include "lmeos/synth.h"
#include "lmeos/tagger.h"
#include "lmeos/vocabulary.h"

namespace lmeos::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

// A usage problem detected after parsing (exit code 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flags that mirror config-file keys. Values given on the command line are
// applied after the config file.
class ConfigFlags {
 public:
  void Add(CLI::App* app, const std::string& flag, const std::string& key,
           const std::string& help) {
    CLI::Option* opt = app->add_option(flag, values_[key], help);
    options_.emplace_back(opt, key);
  }

  void AddPolicyFlags(CLI::App* app) {
    Add(app, "--mode", "mode", "Segmentation policy: v1, v2 or v3");
    Add(app, "--silence-ms", "silence_ms", "Silence timeout in ms (default 500)");
    Add(app, "--hard-timeout-ms", "hard_timeout_ms", "Hard cap on silence in ms (default 2000)");
    Add(app, "--lm-threshold", "lm_threshold", "Minimum P(eos) to accept a boundary (default 0.5)");
    Add(app, "--lookahead-wait-ms", "lookahead_wait_ms",
        "v3: how long to wait for the next word (default hard - silence)");
  }

  RunConfig Resolve(const std::string& config_path) const {
    RunConfig config;
    if (!config_path.empty()) {
      try {
        for (const auto& [key, value] : ReadConfigFile(config_path)) {
          ApplyConfigValue(config, key, value);
        }
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
    }
    for (const auto& [opt, key] : options_) {
      if (opt->count() == 0) continue;
      try {
        ApplyConfigValue(config, key, values_.at(key));
      } catch (const Error& e) {
        throw UsageError(opt->get_name() + ": " + e.what());
      }
    }
    return config;
  }

 private:
  std::map<std::string, std::string> values_;
  std::vector<std::pair<CLI::Option*, std::string>> options_;
};

std::ofstream OpenOutput(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  return out;
}

std::vector<std::string> Words(const std::vector<WordEvent>& stream) {
  std::vector<std::string> out;
  out.reserve(stream.size());
  for (const auto& w : stream) out.push_back(w.word);
  return out;
}

std::vector<std::string> SegmentTokens(const std::vector<Segment>& segments) {
  std::vector<std::string> out;
  for (const auto& s : segments) {
    for (const auto& w : s.words) out.push_back(w.word);
  }
  return out;
}

// ---------------------------------------------------------------- prepare-data

struct PrepareArgs {
  std::string corpus_dir;
  std::string out_path;
  bool lookahead = false;
  std::string config;
};

int PrepareData(const PrepareArgs& args, const ConfigFlags& flags, std::ostream& out,
                std::ostream& err) {
  const RunConfig config = flags.Resolve(args.config);
  const auto docs = ReadCorpusDir(args.corpus_dir);
  CorpusStats stats;
  const auto examples = BuildExamples(docs, args.lookahead, &stats);
  auto file = OpenOutput(args.out_path);
  WriteExamples(file, examples);
  if (examples.empty()) err << "warning: no training examples produced from " << args.corpus_dir << "\n";

  if (config.format == ReportFormat::kJson) {
    ordered_json j;
    j["documents"] = stats.documents;
    j["sentences_kept"] = stats.sentences_kept;
    j["rejected"] = {{"BAD_TERMINAL", stats.rejected_bad_terminal},
                     {"FORBIDDEN_PUNCT", stats.rejected_forbidden_punct},
                     {"EMPTY_AFTER_NORMALIZATION", stats.rejected_empty}};
    j["examples"] = {{"full", stats.full},
                     {"truncated", stats.truncated},
                     {"lookahead", stats.lookahead}};
    out << j.dump() << "\n";
  } else {
    out << "documents:        " << stats.documents << "\n"
        << "sentences kept:   " << stats.sentences_kept << "\n"
        << "rejected:         BAD_TERMINAL=" << stats.rejected_bad_terminal
        << " FORBIDDEN_PUNCT=" << stats.rejected_forbidden_punct
        << " EMPTY_AFTER_NORMALIZATION=" << stats.rejected_empty << "\n"
        << "examples:         full=" << stats.full << " truncated=" << stats.truncated
        << " lookahead=" << stats.lookahead << " total=" << stats.examples() << "\n";
  }
  return kExitOk;
}

// ----------------------------------------------------------------------- train

struct TrainArgs {
  std::string examples;
  std::string out_model;
  std::string heldout;
  std::string config;
  bool lookahead = false;
};

int TrainCommand(const TrainArgs& args, const ConfigFlags& flags, std::ostream& out) {
  const RunConfig config = flags.Resolve(args.config);
  auto examples = ReadExamples(args.examples);
  if (examples.empty()) throw Error(ErrorCode::kEmptyCorpus, args.examples + " has no examples");
  bool lookahead = args.lookahead;
  for (const auto& ex : examples) lookahead |= ex.variant == ExampleVariant::kLookahead;

  std::vector<TrainingExample> train_set;
  std::vector<TrainingExample> heldout_set;
  if (!args.heldout.empty()) {
    train_set = std::move(examples);
    heldout_set = ReadExamples(args.heldout);
  } else {
    if (config.heldout_fraction < 0.0 || config.heldout_fraction >= 1.0) {
      throw UsageError("heldout_fraction must lie in [0, 1)");
    }
    std::vector<std::size_t> order(examples.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    SeededRng rng(config.seed ^ 0x9E3779B97F4A7C15ULL);
    rng.Shuffle(order);
    const auto held = static_cast<std::size_t>(config.heldout_fraction *
                                               static_cast<double>(examples.size()));
    std::vector<bool> is_held(examples.size(), false);
    for (std::size_t k = 0; k < held; ++k) is_held[order[k]] = true;
    for (std::size_t i = 0; i < examples.size(); ++i) {
      (is_held[i] ? heldout_set : train_set).push_back(std::move(examples[i]));
    }
  }

  const Hyperparams& hp = config.hyperparams;
  const Vocabulary vocab = BuildVocab(train_set, hp.max_vocab, hp.min_frequency);
  const TrainResult result = Train(train_set, heldout_set, vocab, hp, lookahead, config.seed);
  SaveModel(result.model, args.out_model);
  const std::string log_path = args.out_model + ".log.csv";
  auto log_file = OpenOutput(log_path);
  WriteTrainingLogCsv(log_file, result.log);

  const TagMetrics train_metrics = Evaluate(result.model, train_set);
  if (config.format == ReportFormat::kJson) {
    ordered_json j;
    j["model"] = args.out_model;
    j["lookahead"] = lookahead;
    j["vocab_size"] = vocab.size();
    j["train_examples"] = train_set.size();
    j["heldout_examples"] = heldout_set.size();
    j["epochs"] = result.log.epochs.size();
    j["best_epoch"] = result.log.best_epoch;
    j["early_stopped"] = result.log.early_stopped;
    j["train_accuracy"] = train_metrics.accuracy;
    j["log"] = log_path;
    out << j.dump() << "\n";
  } else {
    out << "model:            " << args.out_model << (lookahead ? " (look-ahead)" : "") << "\n"
        << "vocabulary:       " << vocab.size() << "\n"
        << "examples:         train=" << train_set.size() << " heldout=" << heldout_set.size()
        << "\n"
        << "epochs:           " << result.log.epochs.size() << " (best " << result.log.best_epoch
        << (result.log.early_stopped ? ", early stop" : "") << ")\n"
        << "train accuracy:   " << train_metrics.accuracy << "\n"
        << "log:              " << log_path << "\n";
  }
  return kExitOk;
}

// --------------------------------------------------------------------- segment

const TaggerModel* LoadModelFor(const RunConfig& config, PolicyMode mode,
                                std::optional<TaggerModel>& storage,
                                const std::string& flag = "--model") {
  if (mode == PolicyMode::kV1) return nullptr;
  if (!config.model_path) {
    throw UsageError(std::string(PolicyModeName(mode)) + " needs an LM-EOS model; pass " +
                     flag + " <path>");
  }
  storage = LoadModel(*config.model_path);
  return &*storage;
}

struct SegmentArgs {
  std::string stream_file;
  std::string output;
  std::string trace;
  std::string config;
  std::string model;
};

int SegmentCommand(const SegmentArgs& args, const ConfigFlags& flags, std::ostream& out) {
  RunConfig config = flags.Resolve(args.config);
  if (!args.model.empty()) config.model_path = args.model;
  try {
    ValidatePolicy(config.policy);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const auto stream = ReadWordEvents(args.stream_file);
  std::optional<TaggerModel> storage;
  const TaggerModel* model = LoadModelFor(config, config.policy.mode, storage);
  const FusionResult result = SegmentStream(stream, config.policy, model);
  if (args.output.empty() || args.output == "-") {
    WriteSegments(out, result.segments);
  } else {
    auto file = OpenOutput(args.output);
    WriteSegments(file, result.segments);
  }
  if (!args.trace.empty()) {
    auto text = OpenOutput(args.trace);
    WriteTraceText(text, result.trace, stream);
    auto machine = OpenOutput(args.trace + ".jsonl");
    WriteTraceJson(machine, result.trace);
  }
  return kExitOk;
}

// -------------------------------------------------------------------- evaluate

struct Counts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  void Add(const SegmentationReport& r) {
    tp += r.true_positives;
    fp += r.false_positives;
    fn += r.false_negatives;
  }
  SegmentationReport Report() const { return ReportFromCounts(tp, fp, fn); }
};

SegmentationReport ScoreFiles(const std::vector<std::string>& hyp_files,
                              const std::vector<Reference>& refs, const std::string& ref_file,
                              bool align) {
  if (hyp_files.size() != refs.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(hyp_files.size()) + " hypothesis file(s) but " + ref_file +
                    " holds " + std::to_string(refs.size()) + " reference stream(s)");
  }
  Counts counts;
  for (std::size_t k = 0; k < refs.size(); ++k) {
    const auto segments = ReadSegments(hyp_files[k]);
    const auto& ref = refs[k];
    const BoundarySet ref_set = MakeBoundarySet(ref.boundaries, ref.tokens.size());
    const auto hyp_tokens = SegmentTokens(segments);
    BoundarySet hyp_set;
    if (hyp_tokens == ref.tokens) {
      hyp_set = BoundariesFromSegments(segments, ref.tokens);
    } else if (align && !hyp_tokens.empty() && !ref.tokens.empty()) {
      std::vector<std::size_t> raw;
      std::size_t pos = 0;
      for (std::size_t s = 0; s + 1 < segments.size(); ++s) {
        pos += segments[s].words.size();
        raw.push_back(pos - 1);
      }
      const BoundarySet hyp_raw = MakeBoundarySet(raw, hyp_tokens.size());
      hyp_set = ProjectBoundaries(hyp_raw, AlignTokens(hyp_tokens, ref.tokens),
                                  ref.tokens.size());
    } else {
      std::size_t first_diff = 0;
      while (first_diff < hyp_tokens.size() && first_diff < ref.tokens.size() &&
             hyp_tokens[first_diff] == ref.tokens[first_diff]) {
        ++first_diff;
      }
      throw Error(ErrorCode::kTokenMismatch,
                  hyp_files[k] + " vs " + ref_file + " stream " + std::to_string(k + 1) +
                      ": tokens differ at position " + std::to_string(first_diff) +
                      " (pass --align to project through an edit-distance alignment)");
    }
    counts.Add(Score(hyp_set, ref_set));
  }
  return counts.Report();
}

struct EvaluateArgs {
  std::vector<std::string> hyp;
  std::string ref;
  std::vector<std::string> baseline;
  double baseline_f = -1.0;
  bool align = false;
  std::string config;
};

int EvaluateCommand(const EvaluateArgs& args, const ConfigFlags& flags, std::ostream& out) {
  const RunConfig config = flags.Resolve(args.config);
  const auto refs = ReadReferences(args.ref);
  const SegmentationReport report = ScoreFiles(args.hyp, refs, args.ref, args.align);
  std::optional<double> base_f;
  std::optional<SegmentationReport> base_report;
  if (!args.baseline.empty()) {
    base_report = ScoreFiles(args.baseline, refs, args.ref, args.align);
    base_f = base_report->f_beta;
  } else if (args.baseline_f >= 0.0) {
    base_f = args.baseline_f;
  }
  std::optional<double> gain;
  if (base_f) gain = RelativeGain(report.f_beta, *base_f);

  if (config.format == ReportFormat::kJson) {
    auto j = ordered_json::parse(ReportJson(report));
    if (base_report) j["baseline"] = ordered_json::parse(ReportJson(*base_report));
    if (base_f) j["baseline_f05"] = *base_f;
    if (gain) j["f05_gain_percent"] = RoundTo(*gain, 1);
    out << j.dump() << "\n";
  } else {
    std::vector<ReportRow> rows;
    if (base_report) rows.push_back({"baseline", *base_report, std::nullopt});
    rows.push_back({"hypothesis", report, gain});
    out << FormatReportTable(rows);
    if (base_f && !base_report) {
      char buf[96];
      std::snprintf(buf, sizeof(buf), "baseline F0.5 %.2f -> gain %.1f%%\n", *base_f,
                    RoundTo(*gain, 1));
      out << buf;
    }
  }
  return kExitOk;
}

// --------------------------------------------------------------------- compare

struct CompareArgs {
  std::string suite;
  std::string model_v2;
  std::string model_v3;
  std::vector<std::string> modes = {"v1", "v2", "v3"};
  std::string config;
};

int CompareCommand(const CompareArgs& args, const ConfigFlags& flags, std::ostream& out) {
  const RunConfig config = flags.Resolve(args.config);
  std::vector<Policy> policies;
  for (const auto& name : args.modes) {
    const auto mode = ParsePolicyMode(name);
    if (!mode) throw UsageError("unknown mode " + name);
    Policy p = config.policy;
    p.mode = *mode;
    try {
      ValidatePolicy(p);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    policies.push_back(p);
  }
  std::optional<TaggerModel> v2_storage;
  std::optional<TaggerModel> v3_storage;
  const TaggerModel* v2 = nullptr;
  const TaggerModel* v3 = nullptr;
  for (const auto& p : policies) {
    if (p.mode == PolicyMode::kV2 && !v2) {
      if (args.model_v2.empty()) throw UsageError("v2 needs a model; pass --model-v2 <path>");
      v2_storage = LoadModel(args.model_v2);
      v2 = &*v2_storage;
    }
    if (p.mode == PolicyMode::kV3 && !v3) {
      if (args.model_v3.empty()) throw UsageError("v3 needs a model; pass --model-v3 <path>");
      v3_storage = LoadModel(args.model_v3);
      v3 = &*v3_storage;
    }
  }

  const auto suite = ReadSuite(args.suite);
  std::map<PolicyMode, Counts> counts;
  for (const auto& stream : suite) {
    const auto ref = MakeBoundarySet(stream.boundaries, stream.words.size());
    const auto tokens = Words(stream.words);
    for (const auto& [mode, result] : ComparePolicies(stream.words, policies, v2, v3)) {
      counts[mode].Add(Score(BoundariesFromSegments(result.segments, tokens), ref));
    }
  }

  std::optional<double> base_f;
  if (counts.count(PolicyMode::kV1)) base_f = counts[PolicyMode::kV1].Report().f_beta;
  std::vector<ReportRow> rows;
  for (const auto& [mode, c] : counts) {
    ReportRow row{std::string(PolicyModeName(mode)), c.Report(), std::nullopt};
    if (base_f && mode != PolicyMode::kV1 && *base_f > 0.0) {
      row.gain = RelativeGain(row.report.f_beta, *base_f);
    }
    rows.push_back(row);
  }
  if (config.format == ReportFormat::kJson) {
    ordered_json j;
    j["streams"] = suite.size();
    for (const auto& row : rows) {
      auto r = ordered_json::parse(ReportJson(row.report));
      if (row.gain) r["f05_gain_percent"] = RoundTo(*row.gain, 1);
      j[row.label] = std::move(r);
    }
    out << j.dump() << "\n";
  } else {
    out << "streams: " << suite.size() << "\n" << FormatReportTable(rows);
  }
  return kExitOk;
}

// ----------------------------------------------------------------------- synth

struct SynthArgs {
  std::string corpus_dir;
  std::size_t docs = 300;
  std::string suite;
  std::size_t streams = 200;
  std::string demo;
  std::uint64_t seed = 1;
};

int SynthCommand(const SynthArgs& args, std::ostream& out) {
  if (args.corpus_dir.empty() && args.suite.empty() && args.demo.empty()) {
    throw UsageError("nothing to do; pass --corpus-dir, --suite and/or --demo");
  }
  const auto docs = MakeSyntheticDocuments(args.docs, args.seed);
  if (!args.corpus_dir.empty()) {
    fs::create_directories(args.corpus_dir);
    auto file = OpenOutput(fs::path(args.corpus_dir) / "synthetic.jsonl");
    for (const auto& d : docs) {
      file << ordered_json{{"doc_id", d.doc_id}, {"text", d.text}}.dump() << "\n";
    }
    out << "wrote " << docs.size() << " documents to " << args.corpus_dir << "\n";
  }
  if (!args.suite.empty()) {
    const auto held = SampleHeldOutSentences(400, args.seed + 1, docs);
    BenchmarkOptions options;
    options.streams = args.streams;
    auto file = OpenOutput(args.suite);
    WriteSuite(file, MakeBenchmark(held, options, args.seed + 2));
    out << "wrote " << args.streams << " benchmark streams to " << args.suite << "\n";
  }
  if (!args.demo.empty()) {
    auto file = OpenOutput(args.demo);
    WriteWordEvents(file, DemoStream());
    out << "wrote demo stream to " << args.demo << "\n";
  }
  return kExitOk;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kModelRequired:
      return kExitUsage;
    default:
      return kExitData;
  }
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hybrid acoustic + language-model speech segmentation toolkit", "lmeos"};
  app.require_subcommand(1);

  PrepareArgs prepare;
  ConfigFlags prepare_flags;
  auto* prepare_cmd = app.add_subcommand("prepare-data", "Build LM-EOS training examples");
  prepare_cmd->add_option("corpus_dir", prepare.corpus_dir, "Directory of .txt / .jsonl documents")
      ->required();
  prepare_cmd->add_option("out_path", prepare.out_path, "Output JSONL file")->required();
  prepare_cmd->add_flag("--lookahead", prepare.lookahead, "Also emit one-word look-ahead rows");
  prepare_cmd->add_option("--config", prepare.config, "key=value config file");
  prepare_flags.Add(prepare_cmd, "--format", "format", "Stats format: text or json");

  TrainArgs train;
  ConfigFlags train_flags;
  auto* train_cmd = app.add_subcommand("train", "Train an LM-EOS tagger");
  train_cmd->add_option("examples", train.examples, "Training examples (JSONL)")->required();
  train_cmd->add_option("out_model", train.out_model, "Model file to write")->required();
  train_cmd->add_option("--heldout", train.heldout, "Held-out examples (JSONL)");
  train_cmd->add_flag("--lookahead", train.lookahead,
                      "Train a look-ahead model (implied by look-ahead rows)");
  train_cmd->add_option("--config", train.config, "key=value config file");
  train_flags.Add(train_cmd, "--seed", "seed", "Random seed");
  train_flags.Add(train_cmd, "--embed-dim", "embed_dim", "Embedding size (default 32)");
  train_flags.Add(train_cmd, "--hidden-dim", "hidden_dim", "LSTM hidden size (default 64)");
  train_flags.Add(train_cmd, "--max-vocab", "max_vocab", "Vocabulary size incl. reserved ids");
  train_flags.Add(train_cmd, "--min-frequency", "min_frequency", "Minimum token count");
  train_flags.Add(train_cmd, "--learning-rate", "learning_rate", "SGD step size");
  train_flags.Add(train_cmd, "--max-epochs", "max_epochs", "Epoch limit (default 200)");
  train_flags.Add(train_cmd, "--patience", "patience", "Early-stopping patience (default 5)");
  train_flags.Add(train_cmd, "--heldout-fraction", "heldout_fraction",
                  "Share of examples held out when --heldout is absent");
  train_flags.Add(train_cmd, "--format", "format", "Summary format: text or json");

  SegmentArgs segment;
  ConfigFlags segment_flags;
  auto* segment_cmd = app.add_subcommand("segment", "Segment a word-event stream");
  segment_cmd->add_option("stream_file", segment.stream_file, "Word events (.jsonl or .csv)")
      ->required();
  segment_cmd->add_option("-o,--output", segment.output, "Segments JSONL (default stdout)");
  segment_cmd->add_option("--trace", segment.trace,
                          "Write a candidate trace here (plus <path>.jsonl)");
  segment_cmd->add_option("--config", segment.config, "key=value config file");
  segment_cmd->add_option("--model", segment.model, "LM-EOS model file (v2/v3)");
  segment_flags.AddPolicyFlags(segment_cmd);
  segment_flags.Add(segment_cmd, "--format", "format", "Unused for segments; accepted for symmetry");

  EvaluateArgs evaluate;
  ConfigFlags evaluate_flags;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score segments against a reference");
  evaluate_cmd->add_option("--hyp", evaluate.hyp, "Hypothesis segments JSONL, one per stream")
      ->required();
  evaluate_cmd->add_option("--ref", evaluate.ref, "Reference file")->required();
  evaluate_cmd->add_option("--baseline", evaluate.baseline,
                           "Baseline segments JSONL, one per stream");
  evaluate_cmd->add_option("--baseline-f", evaluate.baseline_f, "Baseline F0.5 value");
  evaluate_cmd->add_flag("--align", evaluate.align,
                         "Project boundaries through an edit-distance alignment");
  evaluate_cmd->add_option("--config", evaluate.config, "key=value config file");
  evaluate_flags.Add(evaluate_cmd, "--format", "format", "Report format: text or json");

  CompareArgs compare;
  ConfigFlags compare_flags;
  auto* compare_cmd = app.add_subcommand("compare", "Run v1/v2/v3 over a benchmark suite");
  compare_cmd->add_option("suite", compare.suite, "Suite JSONL")->required();
  compare_cmd->add_option("--model-v2", compare.model_v2, "Model without look-ahead");
  compare_cmd->add_option("--model-v3", compare.model_v3, "Model with look-ahead");
  compare_cmd->add_option("--modes", compare.modes, "Policies to run")->delimiter(',');
  compare_cmd->add_option("--config", compare.config, "key=value config file");
  compare_flags.AddPolicyFlags(compare_cmd);
  compare_flags.Add(compare_cmd, "--format", "format", "Report format: text or json");

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Write synthetic corpora, suites and demo streams");
  synth_cmd->add_option("--corpus-dir", synth.corpus_dir, "Directory for synthetic documents");
  synth_cmd->add_option("--docs", synth.docs, "Number of documents");
  synth_cmd->add_option("--suite", synth.suite, "Benchmark suite JSONL to write");
  synth_cmd->add_option("--streams", synth.streams, "Number of benchmark streams");
  synth_cmd->add_option("--demo", synth.demo, "Write the demo word stream here");
  synth_cmd->add_option("--seed", synth.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*prepare_cmd) return PrepareData(prepare, prepare_flags, out, err);
    if (*train_cmd) return TrainCommand(train, train_flags, out);
    if (*segment_cmd) return SegmentCommand(segment, segment_flags, out);
    if (*evaluate_cmd) return EvaluateCommand(evaluate, evaluate_flags, out);
    if (*compare_cmd) return CompareCommand(compare, compare_flags, out);
    if (*synth_cmd) return SynthCommand(synth, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace lmeos::cli
