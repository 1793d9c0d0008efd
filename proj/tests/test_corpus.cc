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

#include <string>
#include <utility>
#include <vector>

#include "lmeos/corpus.h"
#include "lmeos/error.h"
#include "lmeos/number_words.h"
#include "lmeos/synth.h"
#include "lmeos/vocabulary.h"

namespace lmeos {
namespace {

using Strings = std::vector<std::string>;

struct SplitCase {
  const char* text;
  Strings pieces;
};

// Written out by hand, one annotation per line.
const std::vector<SplitCase>& SplitOracle() {
  static const std::vector<SplitCase> cases = {
      {"I'm new in town. Wake me up at noon.", {"I'm new in town.", "Wake me up at noon."}},
      {"", {}},
      {"Dr. Smith left. He ran.", {"Dr. Smith left.", "He ran."}},
      {"How is the weather in Seattle? I'm new in town.",
       {"How is the weather in Seattle?", "I'm new in town."}},
      {"Mr. and Mrs. Jones arrived. They sat down.",
       {"Mr. and Mrs. Jones arrived.", "They sat down."}},
      {"It costs 5 dollars. 3 people paid.", {"It costs 5 dollars.", "3 people paid."}},
      {"Version 2.5 is out. Get it now.", {"Version 2.5 is out.", "Get it now."}},
      {"Wait! Stop right there.", {"Wait!", "Stop right there."}},
      {"Really?! I had no idea.", {"Really?!", "I had no idea."}},
      {"He said no. then he left.", {"He said no. then he left."}},
      {"See fig. 3 for details. It is clear.", {"See fig. 3 for details.", "It is clear."}},
      {"J. R. R. Tolkien wrote books. People read them.",
       {"J. R. R. Tolkien wrote books.", "People read them."}},
      {"The U.S. Army arrived. Everyone cheered.",
       {"The U.S. Army arrived.", "Everyone cheered."}},
      {"Prices rose etc. Nobody cared.", {"Prices rose etc. Nobody cared."}},
      {"Hello world", {"Hello world"}},
      {"One. Two. Three.", {"One.", "Two.", "Three."}},
      {"Go...  Now we start.", {"Go...", "Now we start."}},
      {"He lives on Main St. He is nice.", {"He lives on Main St. He is nice."}},
      {"Call me at 9. Thanks.", {"Call me at 9.", "Thanks."}},
      {"Is it ok?Yes.", {"Is it ok?Yes."}},
      {"  Leading spaces. Trailing   ", {"Leading spaces.", "Trailing"}},
      {"The meeting is at 10 a.m. Tomorrow we go.",
       {"The meeting is at 10 a.m.", "Tomorrow we go."}},
      {"Prof. Brown teaches. Students listen.", {"Prof. Brown teaches.", "Students listen."}},
      {"We met Sgt. Pepper. He sang.", {"We met Sgt. Pepper.", "He sang."}},
      {"Line one.\nLine two.", {"Line one.", "Line two."}},
      {"Tab\tinside. Ok.", {"Tab\tinside.", "Ok."}},
      {"What? Why? How?", {"What?", "Why?", "How?"}},
      {"A. Then B.", {"A. Then B."}},
      {"The end.", {"The end."}},
      {"No. 5 is mine. It won.", {"No. 5 is mine.", "It won."}},
      {"He paid 1,000 dollars. She paid 2,000.", {"He paid 1,000 dollars.", "She paid 2,000."}},
      {"Is it (Mr. Lee)? Yes.", {"Is it (Mr. Lee)?", "Yes."}},
      {"\"Stop.\" He said.", {"\"Stop.\" He said."}},
      {"Hi there.Hello.", {"Hi there.Hello."}},
      {"It was 5 p.m. We left.", {"It was 5 p.m.", "We left."}},
      {"Hi. 2024 was great.", {"Hi.", "2024 was great."}},
      {"Eat vs. drink. Choose one.", {"Eat vs. drink.", "Choose one."}},
      {"Visit Mt. Rainier. It is tall.", {"Visit Mt. Rainier.", "It is tall."}},
      {"Ask Dr. Who? Sure.", {"Ask Dr. Who?", "Sure."}},
      {"i am here. you are there.", {"i am here. you are there."}},
      {"Done! 3 more to go.", {"Done!", "3 more to go."}},
      {"The Inc. filed. Then it closed.", {"The Inc. filed.", "Then it closed."}},
      {"Wow. Just wow.", {"Wow.", "Just wow."}},
      {"Yes?? No!! Maybe.", {"Yes??", "No!!", "Maybe."}},
      {"End with space.   ", {"End with space."}},
      {"Born in 1999. Raised here.", {"Born in 1999.", "Raised here."}},
      {"Meet Gen. Lee. He leads.", {"Meet Gen. Lee.", "He leads."}},
      {"He got a B. Good job.", {"He got a B. Good job."}},
      {"Stop. Go. Stop. Go.", {"Stop.", "Go.", "Stop.", "Go."}},
      {"Rev. Al spoke. Approx. ten came. All left.",
       {"Rev. Al spoke.", "Approx. ten came.", "All left."}},
  };
  return cases;
}

TEST_CASE("sentence splitting matches the annotated oracle") {
  REQUIRE(SplitOracle().size() == 50);
  for (const auto& c : SplitOracle()) {
    CAPTURE(c.text);
    CHECK(SplitAll(c.text) == c.pieces);
  }
}

TEST_CASE("split_sentences keeps only period and question pieces") {
  CHECK(SplitSentences({"d", "Wait! Stop right there. Why?"}) == Strings{"Stop right there.", "Why?"});
  CHECK(SplitSentences({"d", ""}).empty());
  CHECK(SplitSentences({"d", "Hello world"}).empty());
}

TEST_CASE("integers are spelled out") {
  const std::vector<std::pair<int, const char*>> oracle = {
      {0, "zero"},
      {1, "one"},
      {7, "seven"},
      {10, "ten"},
      {11, "eleven"},
      {13, "thirteen"},
      {19, "nineteen"},
      {20, "twenty"},
      {21, "twenty one"},
      {40, "forty"},
      {45, "forty five"},
      {99, "ninety nine"},
      {100, "one hundred"},
      {101, "one hundred one"},
      {110, "one hundred ten"},
      {115, "one hundred fifteen"},
      {250, "two hundred fifty"},
      {999, "nine hundred ninety nine"},
      {1000, "one thousand"},
      {1001, "one thousand one"},
      {1010, "one thousand ten"},
      {1100, "one thousand one hundred"},
      {1999, "one thousand nine hundred ninety nine"},
      {2000, "two thousand"},
      {2024, "two thousand twenty four"},
      {3005, "three thousand five"},
      {4321, "four thousand three hundred twenty one"},
      {7070, "seven thousand seventy"},
      {9000, "nine thousand"},
      {9999, "nine thousand nine hundred ninety nine"},
  };
  REQUIRE(oracle.size() == 30);
  for (const auto& [value, words] : oracle) {
    CAPTURE(value);
    std::string joined;
    for (const auto& w : SpellInteger(value)) joined += (joined.empty() ? "" : " ") + w;
    CHECK(joined == words);
    const auto tokens = NormalizeSpoken("Take " + std::to_string(value) + ".");
    std::string via_normalizer;
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      via_normalizer += (k == 1 ? "" : " ") + tokens[k];
    }
    CHECK(via_normalizer == words);
  }
  CHECK_THROWS_AS(SpellInteger(10000), Error);
  CHECK_THROWS_AS(SpellInteger(-1), Error);
}

TEST_CASE("normalization examples") {
  CHECK(NormalizeSpoken("I'm new in town.") == Strings{"i'm", "new", "in", "town"});
  CHECK(NormalizeSpoken("I’m new in town.") == Strings{"i’m", "new", "in", "town"});
  CHECK(NormalizeSpoken("Meet at 3.") == Strings{"meet", "at", "three"});
  CHECK(NormalizeSpoken("Wow.") == Strings{"wow"});
  CHECK(NormalizeSpoken("We paid 1,250, then left.") ==
        Strings{"we", "paid", "one", "thousand", "two", "hundred", "fifty", "then", "left"});
  CHECK(NormalizeSpoken("Dial 0042.") == Strings{"dial", "zero", "zero", "four", "two"});
  CHECK(NormalizeSpoken("...").empty());
}

TEST_CASE("filter_sentence accepts and rejects") {
  auto a1 = FilterSentence("How is the weather in Seattle?");
  REQUIRE(a1.accepted());
  CHECK(a1.sentence->tokens == Strings{"how", "is", "the", "weather", "in", "seattle"});
  CHECK(a1.sentence->terminal == Terminal::kQuestion);

  auto c1 = FilterSentence("Wake me up at noon tomorrow.");
  REQUIRE(c1.accepted());
  CHECK(c1.sentence->tokens == Strings{"wake", "me", "up", "at", "noon", "tomorrow"});
  CHECK(c1.sentence->terminal == Terminal::kPeriod);

  CHECK(FilterSentence("Hello — world.").reason == RejectReason::kForbiddenPunct);
  CHECK(FilterSentence("Hi; there.").reason == RejectReason::kForbiddenPunct);
  CHECK(FilterSentence("Hello world").reason == RejectReason::kBadTerminal);
  CHECK(FilterSentence("Wow!").reason == RejectReason::kBadTerminal);
  CHECK(FilterSentence("...").reason == RejectReason::kEmptyAfterNormalization);
  CHECK(FilterSentence("Hi, there.").accepted());
}

Sentence Make(Strings tokens) {
  Sentence s;
  s.tokens = std::move(tokens);
  return s;
}

TEST_CASE("v2 and v3 example rows") {
  const auto a = MakeV2Examples(Make({"how", "is", "the", "weather", "in", "seattle"}));
  CHECK(a.full.TagRow() == "O O O O O eos");
  REQUIRE(a.truncated);
  CHECK(a.truncated->TokenRow() == "how is the weather in");
  CHECK(a.truncated->TagRow() == "O O O O O");

  const auto c = MakeV2Examples(Make({"wake", "me", "up", "at", "noon", "tomorrow"}));
  CHECK(c.truncated->TokenRow() == "wake me up at noon");

  const auto wow = MakeV2Examples(Make({"wow"}));
  CHECK(wow.full.TagRow() == "eos");
  CHECK_FALSE(wow.truncated);

  const Sentence next = Make({"i’m", "new", "in", "town"});
  const auto a3 = MakeV3Examples(Make({"how", "is", "the", "weather", "in", "seattle"}), &next);
  REQUIRE(a3.size() == 1);
  CHECK(a3[0].TokenRow() == "how is the weather in seattle i’m");
  CHECK(a3[0].TagRow() == "O O O O O eos O");

  const Sentence how = Make({"how", "did", "you", "sleep"});
  const auto c3 = MakeV3Examples(Make({"wake", "me", "up", "at", "noon"}), &how);
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].tags[4] == Tag::kEos);
  CHECK(c3[0].tags[5] == Tag::kO);

  CHECK(MakeV3Examples(Make({"wow"}), nullptr).empty());
}

TEST_CASE("three-sentence document yields six v2 rows and two look-ahead rows") {
  const RawDocument doc{
      "t1", "How is the weather in Seattle? I’m new in town. Wake me up at noon tomorrow."};
  CorpusStats stats;
  const auto v2 = BuildExamples({doc}, false, &stats);
  Strings rows;
  for (const auto& ex : v2) rows.push_back(ex.TokenRow() + " | " + ex.TagRow());
  CHECK(rows == Strings{
                    "how is the weather in seattle | O O O O O eos",
                    "how is the weather in | O O O O O",
                    "i’m new in town | O O O eos",
                    "i’m new in | O O O",
                    "wake me up at noon tomorrow | O O O O O eos",
                    "wake me up at noon | O O O O O",
                });
  CHECK(stats.full == 3);
  CHECK(stats.truncated == 3);
  CHECK(stats.lookahead == 0);

  const auto v3 = BuildExamples({doc}, true);
  CHECK(v3.size() == 8);
}

TEST_CASE("look-ahead pairs never cross a rejected sentence or a document") {
  const RawDocument doc{"d", "I like tea. Hello; world. You like coffee."};
  const auto rows = BuildExamples({doc, {"e", "Then we go."}}, true);
  for (const auto& ex : rows) CHECK(ex.variant != ExampleVariant::kLookahead);
}

TEST_CASE("corpus invariants over a synthetic corpus") {
  const auto docs = MakeSyntheticDocuments(60, 5);
  CorpusStats stats;
  const auto rows = BuildExamples(docs, true, &stats);
  REQUIRE(!rows.empty());
  std::size_t full = 0;
  std::size_t truncated = 0;
  const TrainingExample* last_full = nullptr;
  for (const auto& ex : rows) {
    CHECK(ValidateExample(ex).empty());
    for (const auto& tok : ex.tokens) {
      for (const char* bad : {".", ",", "?", "!", ";", ":", "—", "\"", " "}) {
        CHECK(tok.find(bad) == std::string::npos);
      }
    }
    if (ex.variant == ExampleVariant::kFull) {
      ++full;
      last_full = &ex;
    } else if (ex.variant == ExampleVariant::kTruncated) {
      ++truncated;
      REQUIRE(last_full != nullptr);
      CHECK(ex.tokens == Strings(last_full->tokens.begin(), last_full->tokens.end() - 1));
    }
  }
  CHECK(full >= truncated);
  CHECK(full == stats.full);
  CHECK(truncated == stats.truncated);

  for (const auto& doc : docs) {
    for (const auto& piece : SplitSentences(doc)) {
      const auto once = NormalizeSpoken(piece);
      std::string rejoined;
      for (const auto& t : once) rejoined += (rejoined.empty() ? "" : " ") + t;
      CHECK(NormalizeSpoken(rejoined + ".") == once);
    }
  }
}

TEST_CASE("build_vocab ordering and cut-offs") {
  auto ex = [](Strings tokens) {
    TrainingExample e;
    e.tags.assign(tokens.size(), Tag::kO);
    e.tokens = std::move(tokens);
    return e;
  };
  const std::vector<TrainingExample> abc = {ex({"a", "a", "a", "b", "b", "c"})};
  const Vocabulary v = BuildVocab(abc, 4);
  CHECK(v.tokens() == Strings{"<pad>", "<oov>", "a", "b"});
  CHECK(v.Lookup("c") == kOovId);
  CHECK(v.Lookup("<pad>") == kOovId);

  CHECK(BuildVocab({ex({"a"})}, 10, 2).size() == 2);
  const Vocabulary tie = BuildVocab({ex({"zeta", "alpha"})}, 10);
  CHECK(tie.Lookup("alpha") < tie.Lookup("zeta"));
  CHECK_THROWS_AS(BuildVocab({}, 10), Error);
}

}  // namespace
}  // namespace lmeos
