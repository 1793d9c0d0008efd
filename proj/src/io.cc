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

#include "lmeos/io.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "lmeos/error.h"

namespace lmeos {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::ifstream OpenInput(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return in;
}

std::string ReadAll(const std::filesystem::path& path) {
  auto in = OpenInput(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

[[noreturn]] void Fail(const std::filesystem::path& path, std::size_t line,
                       const std::string& what) {
  throw Error(ErrorCode::kParseError,
              path.string() + ":" + std::to_string(line) + ": " + what);
}

bool IsBlank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

void StripCr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

// Calls fn(json, line_number) for every non-blank line.
template <typename Fn>
void ForEachJsonLine(const std::filesystem::path& path, Fn&& fn) {
  auto in = OpenInput(path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    StripCr(line);
    if (IsBlank(line)) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      Fail(path, lineno, std::string("invalid JSON: ") + e.what());
    }
    try {
      fn(j, lineno);
    } catch (const json::exception& e) {
      Fail(path, lineno, e.what());
    }
  }
}

WordEvent WordFromJson(const json& j) {
  WordEvent e;
  e.word = j.at("word").get<std::string>();
  e.start_ms = j.at("start_ms").get<std::int64_t>();
  e.end_ms = j.at("end_ms").get<std::int64_t>();
  return e;
}

ordered_json WordToJson(const WordEvent& e) {
  ordered_json j;
  j["word"] = e.word;
  j["start_ms"] = e.start_ms;
  j["end_ms"] = e.end_ms;
  return j;
}

bool LooksLikeJson(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".jsonl" || ext == ".json") return true;
  auto in = OpenInput(path);
  char c;
  while (in.get(c)) {
    if (!std::isspace(static_cast<unsigned char>(c))) return c == '{';
  }
  return false;
}

std::vector<std::string> SplitWhitespace(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string w;
  while (ss >> w) out.push_back(w);
  return out;
}

}  // namespace

std::vector<RawDocument> ReadCorpusDir(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Error(ErrorCode::kIoError, "not a readable directory: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension().string();
    if (ext == ".txt" || ext == ".jsonl") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<RawDocument> docs;
  for (const auto& path : files) {
    if (path.extension() == ".txt") {
      RawDocument doc{path.filename().string(), ReadAll(path)};
      if (!IsValidUtf8(doc.text)) {
        throw Error(ErrorCode::kInvalidUtf8, path.string() + " is not valid UTF-8");
      }
      docs.push_back(std::move(doc));
      continue;
    }
    ForEachJsonLine(path, [&](const json& j, std::size_t lineno) {
      RawDocument doc{j.at("doc_id").get<std::string>(), j.at("text").get<std::string>()};
      if (!IsValidUtf8(doc.text)) Fail(path, lineno, "text is not valid UTF-8");
      docs.push_back(std::move(doc));
    });
  }
  return docs;
}

void WriteExamples(std::ostream& out, const std::vector<TrainingExample>& examples) {
  for (const auto& ex : examples) {
    ordered_json j;
    j["tokens"] = ex.tokens;
    auto tags = ordered_json::array();
    for (Tag t : ex.tags) tags.push_back(std::string(TagName(t)));
    j["tags"] = std::move(tags);
    j["variant"] = std::string(VariantName(ex.variant));
    out << j.dump() << '\n';
  }
}

std::vector<TrainingExample> ReadExamples(const std::filesystem::path& path) {
  std::vector<TrainingExample> out;
  ForEachJsonLine(path, [&](const json& j, std::size_t lineno) {
    TrainingExample ex;
    ex.tokens = j.at("tokens").get<std::vector<std::string>>();
    for (const auto& t : j.at("tags")) {
      const auto tag = ParseTag(t.get<std::string>());
      if (!tag) Fail(path, lineno, "unknown tag " + t.dump());
      ex.tags.push_back(*tag);
    }
    const auto variant = ParseVariant(j.value("variant", std::string("full")));
    if (!variant) Fail(path, lineno, "unknown variant");
    ex.variant = *variant;
    if (const auto problem = ValidateExample(ex); !problem.empty()) {
      Fail(path, lineno, problem);
    }
    out.push_back(std::move(ex));
  });
  return out;
}

std::vector<WordEvent> ReadWordEvents(const std::filesystem::path& path) {
  std::vector<WordEvent> out;
  if (path.extension() != ".csv") {
    ForEachJsonLine(path, [&](const json& j, std::size_t) { out.push_back(WordFromJson(j)); });
    return out;
  }
  auto in = OpenInput(path);
  std::string line;
  std::size_t lineno = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++lineno;
    StripCr(line);
    if (IsBlank(line)) continue;
    if (header) {
      if (line != "word,start_ms,end_ms") Fail(path, lineno, "expected header word,start_ms,end_ms");
      header = false;
      continue;
    }
    const auto c2 = line.rfind(',');
    const auto c1 = c2 == std::string::npos ? c2 : line.rfind(',', c2 - 1);
    if (c1 == std::string::npos || c2 == 0) Fail(path, lineno, "expected word,start_ms,end_ms");
    WordEvent e;
    e.word = line.substr(0, c1);
    try {
      std::size_t used = 0;
      const std::string start = line.substr(c1 + 1, c2 - c1 - 1);
      const std::string end = line.substr(c2 + 1);
      e.start_ms = std::stoll(start, &used);
      if (used != start.size()) throw std::invalid_argument(start);
      e.end_ms = std::stoll(end, &used);
      if (used != end.size()) throw std::invalid_argument(end);
    } catch (const std::exception&) {
      Fail(path, lineno, "times must be integers");
    }
    out.push_back(std::move(e));
  }
  return out;
}

void WriteWordEvents(std::ostream& out, const std::vector<WordEvent>& stream) {
  for (const auto& e : stream) out << WordToJson(e).dump() << '\n';
}

void WriteSegments(std::ostream& out, const std::vector<Segment>& segments) {
  for (const auto& seg : segments) {
    ordered_json j;
    auto tokens = ordered_json::array();
    for (const auto& w : seg.words) tokens.push_back(w.word);
    j["tokens"] = std::move(tokens);
    j["start_ms"] = seg.start_ms();
    j["end_ms"] = seg.end_ms();
    j["boundary_index"] = seg.boundary_index;
    j["decision"] = std::string(DecisionName(seg.decision));
    j["p_eos"] = seg.p_eos ? ordered_json(*seg.p_eos) : ordered_json(nullptr);
    j["latency_ms"] = seg.latency_ms;
    out << j.dump() << '\n';
  }
}

std::vector<Segment> ReadSegments(const std::filesystem::path& path) {
  std::vector<Segment> out;
  ForEachJsonLine(path, [&](const json& j, std::size_t lineno) {
    Segment seg;
    const auto tokens = j.at("tokens").get<std::vector<std::string>>();
    if (tokens.empty()) Fail(path, lineno, "segment without tokens");
    // Per-word timings are not stored; spread the span over the tokens.
    const auto start = j.value("start_ms", std::int64_t{0});
    const auto end = j.value("end_ms", start + static_cast<std::int64_t>(tokens.size()));
    for (std::size_t k = 0; k < tokens.size(); ++k) {
      seg.words.push_back({tokens[k], k == 0 ? start : end, end});
    }
    seg.boundary_index = j.value("boundary_index", std::size_t{0});
    const auto decision = j.value("decision", std::string("stream_end"));
    for (Decision d : {Decision::kVadOnly, Decision::kLmConfirmed, Decision::kHardTimeout,
                       Decision::kStreamEnd}) {
      if (DecisionName(d) == decision) seg.decision = d;
    }
    if (j.contains("p_eos") && !j["p_eos"].is_null()) seg.p_eos = j["p_eos"].get<double>();
    seg.latency_ms = j.value("latency_ms", std::int64_t{0});
    out.push_back(std::move(seg));
  });
  return out;
}

void WriteTraceText(std::ostream& out, const SegmenterTrace& trace,
                    const std::vector<WordEvent>& stream) {
  for (const auto& e : trace.entries) {
    const auto& c = e.candidate;
    out << std::setw(8) << c.fired_at_ms << "ms  " << std::left << std::setw(12)
        << CandidateKindName(c.kind) << std::right << " after #" << c.after_token_index;
    if (c.after_token_index < stream.size()) {
      out << " \"" << stream[c.after_token_index].word << "\"";
    }
    out << "  silence=" << c.silence_ms << "ms";
    if (e.p_eos) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.4f", *e.p_eos);
      out << "  p_eos=" << buf;
    }
    if (e.lookahead_arrived) {
      out << (*e.lookahead_arrived ? "  lookahead=arrived" : "  lookahead=flushed");
    }
    out << "  -> " << VerdictName(e.verdict) << "  latency=" << e.latency_ms << "ms\n";
  }
}

void WriteTraceJson(std::ostream& out, const SegmenterTrace& trace) {
  for (const auto& e : trace.entries) {
    ordered_json j;
    j["kind"] = std::string(CandidateKindName(e.candidate.kind));
    j["after_token_index"] = e.candidate.after_token_index;
    j["silence_ms"] = e.candidate.silence_ms;
    j["fired_at_ms"] = e.candidate.fired_at_ms;
    j["lm_queried"] = e.lm_queried;
    j["p_eos"] = e.p_eos ? ordered_json(*e.p_eos) : ordered_json(nullptr);
    j["lookahead_arrived"] =
        e.lookahead_arrived ? ordered_json(*e.lookahead_arrived) : ordered_json(nullptr);
    j["verdict"] = std::string(VerdictName(e.verdict));
    j["latency_ms"] = e.latency_ms;
    out << j.dump() << '\n';
  }
}

std::vector<Reference> ReadReferences(const std::filesystem::path& path) {
  std::vector<Reference> out;
  if (LooksLikeJson(path)) {
    ForEachJsonLine(path, [&](const json& j, std::size_t lineno) {
      Reference ref;
      ref.tokens = j.at("tokens").get<std::vector<std::string>>();
      ref.boundaries = j.at("boundaries").get<std::vector<std::size_t>>();
      for (std::size_t b : ref.boundaries) {
        if (b >= ref.tokens.size()) Fail(path, lineno, "boundary past the last token");
      }
      out.push_back(std::move(ref));
    });
    return out;
  }
  auto in = OpenInput(path);
  Reference ref;
  std::string line;
  while (std::getline(in, line)) {
    StripCr(line);
    const auto words = SplitWhitespace(line);
    if (words.empty()) continue;
    ref.tokens.insert(ref.tokens.end(), words.begin(), words.end());
    ref.boundaries.push_back(ref.tokens.size() - 1);
  }
  out.push_back(std::move(ref));
  return out;
}

std::vector<SuiteStream> ReadSuite(const std::filesystem::path& path) {
  std::vector<SuiteStream> out;
  ForEachJsonLine(path, [&](const json& j, std::size_t lineno) {
    SuiteStream s;
    s.id = j.value("id", std::to_string(lineno));
    for (const auto& w : j.at("words")) s.words.push_back(WordFromJson(w));
    s.boundaries = j.at("boundaries").get<std::vector<std::size_t>>();
    for (std::size_t b : s.boundaries) {
      if (b >= s.words.size()) Fail(path, lineno, "boundary past the last word");
    }
    out.push_back(std::move(s));
  });
  return out;
}

void WriteSuite(std::ostream& out, const std::vector<SuiteStream>& suite) {
  for (const auto& s : suite) {
    ordered_json j;
    j["id"] = s.id;
    auto words = ordered_json::array();
    for (const auto& w : s.words) words.push_back(WordToJson(w));
    j["words"] = std::move(words);
    j["boundaries"] = s.boundaries;
    out << j.dump() << '\n';
  }
}

void WriteTrainingLogCsv(std::ostream& out, const TrainingLog& log) {
  out << "epoch,train_loss,train_accuracy,heldout_accuracy,heldout_eos_f1\n";
  char buf[160];
  for (const auto& e : log.epochs) {
    std::snprintf(buf, sizeof(buf), "%zu,%.9g,%.6f,%.6f,%.6f\n", e.epoch, e.train_loss,
                  e.train_accuracy, e.heldout_accuracy, e.heldout_eos_f1);
    out << buf;
  }
}

}  // namespace lmeos
