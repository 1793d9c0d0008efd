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

#include "lmeos/synth.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string_view>

namespace lmeos {
namespace {

struct Template {
  std::string_view body;
  std::string_view optional_tail;  // empty when none
  bool question;
};

constexpr std::array<Template, 32> kTemplates = {{
    {"how is the weather in {CITY}", "{WHEN}", true},
    {"what time does the {PLACE} open", "{WHEN}", true},
    {"can you remind me to {TASK}", "{WHEN}", true},
    {"do you know where the {THING} is", "", true},
    {"where did i put my {THING}", "", true},
    {"is it going to rain in {CITY}", "{WHEN}", true},
    {"could you tell {PERSON} that i will be late", "{WHEN}", true},
    {"how long does it take to get to {CITY}", "", true},
    {"what is on my calendar", "{WHEN}", true},
    {"did {PERSON} call me", "{WHEN}", true},
    {"wake me up at {TIME}", "{WHEN}", false},
    {"i'm new in town", "", false},
    {"i need to {TASK}", "{WHEN}", false},
    {"please send a message to {PERSON}", "{WHEN}", false},
    {"play some {MUSIC}", "in the {ROOM}", false},
    {"turn off the lights in the {ROOM}", "", false},
    {"set a timer for {NUM} minutes", "", false},
    {"we are meeting {PERSON} at the {PLACE}", "{WHEN}", false},
    {"my {RELATIVE} lives in {CITY}", "", false},
    {"the {THING} is on the table in the {ROOM}", "", false},
    {"let's have dinner at {TIME}", "{WHEN}", false},
    {"i think we should leave", "{WHEN}", false},
    {"tell me a joke", "", false},
    {"add {FOOD} to my shopping list", "", false},
    {"book a table for {NUM} at the {PLACE}", "{WHEN}", false},
    {"thank you so much", "", false},
    {"they moved to {CITY} last year", "", false},
    {"it was really nice to see you again", "", false},
    {"call {PERSON} when you get home", "", false},
    {"i will be there in {NUM} minutes", "", false},
    {"are you coming to the {PLACE}", "{WHEN}", true},
    {"remind me to {TASK}", "{WHEN}", false},
}};

const std::map<std::string_view, std::vector<std::string_view>>& Slots() {
  static const std::map<std::string_view, std::vector<std::string_view>> slots = {
      {"CITY", {"seattle", "boston", "new york", "san francisco", "chicago", "london",
                "paris", "denver", "austin", "portland"}},
      {"WHEN", {"tomorrow", "today", "tonight", "this evening", "next week", "on monday",
                "on friday", "this weekend", "in the morning", "after lunch"}},
      {"PLACE", {"store", "bank", "pharmacy", "library", "gym", "restaurant", "post office",
                 "museum", "cafe"}},
      {"TASK", {"call my mother", "buy some milk", "pay the rent", "water the plants",
                "pick up the kids", "finish the report", "book a flight",
                "clean the kitchen"}},
      {"THING", {"keys", "phone", "wallet", "charger", "umbrella", "laptop", "glasses",
                 "passport"}},
      {"PERSON", {"john", "sarah", "my boss", "the doctor", "alex", "my brother", "emma",
                  "david"}},
      {"TIME", {"noon", "seven", "six thirty", "eight fifteen", "nine", "ten thirty",
                "midnight"}},
      {"MUSIC", {"jazz", "rock music", "classical music", "country songs", "new songs"}},
      {"ROOM", {"kitchen", "living room", "bedroom", "office", "garage", "hallway"}},
      {"NUM", {"two", "three", "four", "five", "ten", "twenty", "fifteen", "thirty"}},
      {"RELATIVE", {"sister", "brother", "mother", "father", "cousin", "aunt"}},
      {"FOOD", {"eggs", "bread", "apples", "coffee", "cheese", "rice", "tomatoes"}},
  };
  return slots;
}

void Expand(std::string_view pattern, SeededRng& rng, std::vector<std::string>& out) {
  std::istringstream ss{std::string(pattern)};
  std::string word;
  while (ss >> word) {
    if (word.size() > 2 && word.front() == '{' && word.back() == '}') {
      const auto& values = Slots().at(std::string_view(word).substr(1, word.size() - 2));
      std::istringstream vs{std::string(values[rng.Below(values.size())])};
      std::string v;
      while (vs >> v) out.push_back(v);
    } else {
      out.push_back(word);
    }
  }
}

const std::map<std::string_view, std::string_view>& Digits() {
  static const std::map<std::string_view, std::string_view> digits = {
      {"two", "2"},   {"three", "3"},    {"four", "4"},    {"five", "5"},
      {"ten", "10"},  {"twenty", "20"}, {"fifteen", "15"}, {"thirty", "30"}};
  return digits;
}

bool IsProperName(std::string_view w) {
  static const std::set<std::string_view> names = {
      "john",   "sarah",   "alex",     "emma",  "david", "seattle", "boston",
      "london", "paris",   "denver",   "austin", "portland", "chicago", "monday",
      "friday", "york",    "francisco", "san"};
  return names.count(w) > 0;
}

std::string Join(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

}  // namespace

SynthSentence SampleSentence(SeededRng& rng) {
  const Template& t = kTemplates[rng.Below(kTemplates.size())];
  SynthSentence s;
  s.question = t.question;
  Expand(t.body, rng, s.tokens);
  if (!t.optional_tail.empty() && rng.Uniform() < 0.5) Expand(t.optional_tail, rng, s.tokens);
  return s;
}

std::string RenderWritten(const SynthSentence& sentence, SeededRng& rng) {
  std::string out;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    std::string w = sentence.tokens[i];
    if (const auto it = Digits().find(w); it != Digits().end() && rng.Uniform() < 0.5) {
      w = std::string(it->second);
    } else if (w == "i" || w.rfind("i'", 0) == 0 || IsProperName(w) || i == 0) {
      w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
    }
    if (i) out += ' ';
    out += w;
    if (i == 0 && w == "Please" && sentence.tokens.size() > 1 && rng.Uniform() < 0.3) {
      out += ',';
    }
  }
  out += sentence.question ? '?' : '.';
  return out;
}

std::vector<RawDocument> MakeSyntheticDocuments(std::size_t documents, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<RawDocument> docs;
  for (std::size_t d = 0; d < documents; ++d) {
    const std::size_t n = 3 + rng.Below(6);
    std::string text;
    for (std::size_t k = 0; k < n; ++k) {
      if (k) text += ' ';
      text += RenderWritten(SampleSentence(rng), rng);
    }
    char id[32];
    std::snprintf(id, sizeof(id), "synth-%05zu", d);
    docs.push_back({id, std::move(text)});
  }
  return docs;
}

std::vector<SynthSentence> SamplePrefixFreeSentences(std::size_t count, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<SynthSentence> out;
  std::size_t attempts = 0;
  while (out.size() < count && attempts++ < 100000) {
    SynthSentence s = SampleSentence(rng);
    const bool clash = std::any_of(out.begin(), out.end(), [&](const SynthSentence& o) {
      const std::size_t m = std::min(o.tokens.size(), s.tokens.size());
      return std::equal(o.tokens.begin(), o.tokens.begin() + static_cast<std::ptrdiff_t>(m),
                        s.tokens.begin());
    });
    if (!clash) out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::vector<std::string>> SampleHeldOutSentences(
    std::size_t count, std::uint64_t seed, const std::vector<RawDocument>& exclude) {
  std::set<std::string> seen;
  for (const auto& doc : exclude) {
    for (const auto& piece : SplitAll(doc.text)) {
      seen.insert(Join(NormalizeSpoken(piece)));
    }
  }
  SeededRng rng(seed);
  std::vector<std::vector<std::string>> out;
  std::size_t attempts = 0;
  while (out.size() < count && attempts++ < 1000000) {
    auto s = SampleSentence(rng);
    if (seen.insert(Join(s.tokens)).second) out.push_back(std::move(s.tokens));
  }
  return out;
}

std::vector<SuiteStream> MakeBenchmark(const std::vector<std::vector<std::string>>& sentences,
                                       const BenchmarkOptions& options, std::uint64_t seed) {
  SeededRng rng(seed);
  auto between = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng.Below(static_cast<std::size_t>(hi - lo + 1)));
  };
  std::vector<SuiteStream> suite;
  if (sentences.empty()) return suite;
  for (std::size_t s = 0; s < options.streams; ++s) {
    SuiteStream stream;
    char id[32];
    std::snprintf(id, sizeof(id), "bench-%04zu", s);
    stream.id = id;
    const std::size_t k =
        options.min_sentences + rng.Below(options.max_sentences - options.min_sentences + 1);
    std::int64_t t = between(0, 300);
    for (std::size_t j = 0; j < k; ++j) {
      const auto& tokens = sentences[rng.Below(sentences.size())];
      const std::size_t n = tokens.size();
      std::size_t mid_pause = n;  // none
      if (n >= 2 && rng.Uniform() < options.mid_pause_probability) {
        mid_pause = rng.Below(n - 1);
      }
      for (std::size_t w = 0; w < n; ++w) {
        const std::int64_t dur = between(options.word_min_ms, options.word_max_ms);
        stream.words.push_back({tokens[w], t, t + dur});
        t += dur;
        const bool sentence_end = w + 1 == n;
        bool pause = false;
        if (sentence_end) {
          if (j + 1 == k) break;
          stream.boundaries.push_back(stream.words.size() - 1);
          pause = rng.Uniform() < options.end_pause_probability;
        } else {
          pause = w == mid_pause;
        }
        t += pause ? between(options.pause_min_ms, options.pause_max_ms)
                   : between(options.gap_min_ms, options.gap_max_ms);
      }
    }
    suite.push_back(std::move(stream));
  }
  return suite;
}

std::vector<WordEvent> DemoStream() {
  const std::vector<std::string> words = {"how", "is",  "the", "weather", "in",  "seattle",
                                          "i'm", "new", "in",  "town"};
  std::vector<WordEvent> out;
  std::int64_t t = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    out.push_back({words[i], t, t + 300});
    t += 300;
    t += (words[i] == "seattle" || i == 4) ? 600 : 100;
  }
  return out;
}

}  // namespace lmeos
