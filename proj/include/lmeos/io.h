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

#ifndef LMEOS_IO_H_
#define LMEOS_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "lmeos/corpus.h"
#include "lmeos/endpoint.h"
#include "lmeos/fusion.h"
#include "lmeos/tagger.h"

namespace lmeos {

// All readers throw Error(kIoError) for unreadable files and
// Error(kParseError) with "path:line:" diagnostics for malformed content.

// *.txt files become one document each (doc_id = file name); *.jsonl files
// hold {"doc_id": str, "text": str} per line. Files are read in name order.
std::vector<RawDocument> ReadCorpusDir(const std::filesystem::path& dir);

// {"tokens": [...], "tags": ["O"|"eos"], "variant": "full"|"truncated"|"lookahead"}
void WriteExamples(std::ostream& out, const std::vector<TrainingExample>& examples);
std::vector<TrainingExample> ReadExamples(const std::filesystem::path& path);

// JSON Lines {"word", "start_ms", "end_ms"}, or CSV with a
// "word,start_ms,end_ms" header (chosen by the .csv extension).
std::vector<WordEvent> ReadWordEvents(const std::filesystem::path& path);
void WriteWordEvents(std::ostream& out, const std::vector<WordEvent>& stream);

// {"tokens", "start_ms", "end_ms", "boundary_index", "decision", "p_eos", "latency_ms"}
void WriteSegments(std::ostream& out, const std::vector<Segment>& segments);
std::vector<Segment> ReadSegments(const std::filesystem::path& path);

// Human-readable trace, one line per candidate, and the JSON Lines twin.
void WriteTraceText(std::ostream& out, const SegmenterTrace& trace,
                    const std::vector<WordEvent>& stream);
void WriteTraceJson(std::ostream& out, const SegmenterTrace& trace);

struct Reference {
  std::vector<std::string> tokens;
  std::vector<std::size_t> boundaries;
};

// JSON Lines {"tokens": [...], "boundaries": [...]}, one stream per line, or
// plain text with one segment per line (a single stream). Files ending in
// .jsonl/.json, or whose first non-blank character is '{', are JSON.
std::vector<Reference> ReadReferences(const std::filesystem::path& path);

// A benchmark suite: one stream per line,
// {"id": str, "words": [{"word", "start_ms", "end_ms"}...], "boundaries": [...]}.
struct SuiteStream {
  std::string id;
  std::vector<WordEvent> words;
  std::vector<std::size_t> boundaries;
};

std::vector<SuiteStream> ReadSuite(const std::filesystem::path& path);
void WriteSuite(std::ostream& out, const std::vector<SuiteStream>& suite);

// Per-epoch training log as CSV.
void WriteTrainingLogCsv(std::ostream& out, const TrainingLog& log);

}  // namespace lmeos

#endif  // LMEOS_IO_H_
