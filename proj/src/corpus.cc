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

#include "lmeos/corpus.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>

#include "lmeos/number_words.h"

namespace lmeos {
namespace {

constexpr char32_t kRightSingleQuote = 0x2019;
constexpr char32_t kInvalid = 0xFFFFFFFF;

// Decodes one code point at `pos`, advancing it. Returns kInvalid on a
// malformed sequence (and advances by one byte).
char32_t DecodeAt(std::string_view s, std::size_t& pos) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) {
    ++pos;
    return b0;
  }
  int len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++pos;
    return kInvalid;
  }
  if (pos + len > s.size()) {
    ++pos;
    return kInvalid;
  }
  for (int i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) {
      ++pos;
      return kInvalid;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  // Overlong encodings, surrogates and out-of-range values.
  static constexpr std::array<char32_t, 5> kMin = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    ++pos;
    return kInvalid;
  }
  pos += len;
  return cp;
}

bool IsSpace(char32_t cp) {
  if (cp < 0x80) return std::isspace(static_cast<int>(cp)) != 0;
  return cp == 0x00A0 || (cp >= 0x2000 && cp <= 0x200A) || cp == 0x2028 ||
         cp == 0x2029 || cp == 0x202F || cp == 0x205F || cp == 0x3000;
}

bool IsApostrophe(char32_t cp) { return cp == '\'' || cp == kRightSingleQuote; }

// Punctuation and symbols. Non-ASCII letters (accented, other scripts) are
// not punctuation.
bool IsPunct(char32_t cp) {
  if (cp < 0x80) return std::ispunct(static_cast<int>(cp)) != 0;
  if (IsSpace(cp)) return false;
  return (cp >= 0x00A1 && cp <= 0x00BF) || cp == 0x00D7 || cp == 0x00F7 ||
         (cp >= 0x2010 && cp <= 0x2027) || (cp >= 0x2030 && cp <= 0x205E) ||
         (cp >= 0x20A0 && cp <= 0x20CF) || (cp >= 0x2190 && cp <= 0x2BFF) ||
         (cp >= 0x3001 && cp <= 0x303F) || (cp >= 0xFF01 && cp <= 0xFF0F) ||
         (cp >= 0xFF1A && cp <= 0xFF20) || (cp >= 0xFF3B && cp <= 0xFF40) ||
         (cp >= 0xFF5B && cp <= 0xFF65);
}

bool IsAllowedPunct(char32_t cp) {
  return cp == '.' || cp == ',' || cp == '?' || IsApostrophe(cp);
}

bool IsDigit(char32_t cp) { return cp >= '0' && cp <= '9'; }

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\f\v");
  return s.substr(first, last - first + 1);
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

// Words whose trailing period never ends a sentence.
constexpr std::array<std::string_view, 24> kAbbreviations = {
    "mr",  "mrs", "ms",  "dr",  "prof", "st",  "jr",   "sr",
    "vs",  "etc", "e.g", "i.e", "inc",  "ltd", "co",   "mt",
    "no",  "fig", "gen", "col", "sgt",  "rev", "u.s", "approx"};

bool IsAbbreviation(std::string_view word) {
  // Strip opening brackets/quotes.
  while (!word.empty() && (word.front() == '(' || word.front() == '"' ||
                           word.front() == '\'')) {
    word.remove_prefix(1);
  }
  if (word.size() == 1 && std::isalpha(static_cast<unsigned char>(word[0]))) {
    return true;  // initial
  }
  const std::string lowered = Lower(word);
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), lowered) !=
         kAbbreviations.end();
}

// Word immediately preceding byte offset `end` (exclusive), without the dot.
std::string_view WordBefore(std::string_view text, std::size_t end) {
  std::size_t begin = end;
  while (begin > 0 && !std::isspace(static_cast<unsigned char>(text[begin - 1]))) {
    --begin;
  }
  return text.substr(begin, end - begin);
}

bool IsTerminalChar(char c) { return c == '.' || c == '?' || c == '!'; }

std::string JoinRow(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ' ';
    out += items[i];
  }
  return out;
}

void AppendUtf8(std::string& out, std::string_view src, std::size_t begin,
                std::size_t end) {
  out.append(src.substr(begin, end - begin));
}

}  // namespace

bool IsValidUtf8(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (DecodeAt(text, pos) == kInvalid) return false;
  }
  return true;
}

std::string_view TagName(Tag tag) { return tag == Tag::kEos ? "eos" : "O"; }

std::optional<Tag> ParseTag(std::string_view name) {
  if (name == "O") return Tag::kO;
  if (name == "eos") return Tag::kEos;
  return std::nullopt;
}

std::string_view VariantName(ExampleVariant variant) {
  switch (variant) {
    case ExampleVariant::kFull:
      return "full";
    case ExampleVariant::kTruncated:
      return "truncated";
    case ExampleVariant::kLookahead:
      return "lookahead";
  }
  return "full";
}

std::optional<ExampleVariant> ParseVariant(std::string_view name) {
  if (name == "full") return ExampleVariant::kFull;
  if (name == "truncated") return ExampleVariant::kTruncated;
  if (name == "lookahead") return ExampleVariant::kLookahead;
  return std::nullopt;
}

std::string_view RejectReasonName(RejectReason reason) {
  switch (reason) {
    case RejectReason::kBadTerminal:
      return "BAD_TERMINAL";
    case RejectReason::kForbiddenPunct:
      return "FORBIDDEN_PUNCT";
    case RejectReason::kEmptyAfterNormalization:
      return "EMPTY_AFTER_NORMALIZATION";
  }
  return "BAD_TERMINAL";
}

std::string TrainingExample::TokenRow() const { return JoinRow(tokens); }

std::string TrainingExample::TagRow() const {
  std::string out;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (i) out += ' ';
    out += TagName(tags[i]);
  }
  return out;
}

std::string ValidateExample(const TrainingExample& example) {
  const auto n = example.tokens.size();
  if (n == 0) return "empty token list";
  if (example.tags.size() != n) return "tag count differs from token count";
  const auto eos_count = static_cast<std::size_t>(
      std::count(example.tags.begin(), example.tags.end(), Tag::kEos));
  switch (example.variant) {
    case ExampleVariant::kFull:
      if (eos_count != 1 || example.tags.back() != Tag::kEos) {
        return "full example needs exactly one eos at the last position";
      }
      break;
    case ExampleVariant::kTruncated:
      if (eos_count != 0) return "truncated example must not contain eos";
      break;
    case ExampleVariant::kLookahead:
      if (n < 2 || eos_count != 1 || example.tags[n - 2] != Tag::kEos) {
        return "lookahead example needs exactly one eos at position n-2";
      }
      break;
  }
  return {};
}

std::vector<std::string> SplitAll(std::string_view text) {
  std::vector<std::string> pieces;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!IsTerminalChar(text[i])) {
      ++i;
      continue;
    }
    const std::size_t mark = i;
    std::size_t j = i;
    while (j < text.size() && IsTerminalChar(text[j])) ++j;
    std::size_t k = j;
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) {
      ++k;
    }
    const bool has_space = k > j;
    const bool next_starts =
        k < text.size() && (std::isupper(static_cast<unsigned char>(text[k])) ||
                            std::isdigit(static_cast<unsigned char>(text[k])));
    bool split = has_space && next_starts;
    if (split && text[mark] == '.' && j == mark + 1 &&
        IsAbbreviation(WordBefore(text, mark))) {
      split = false;
    }
    if (split) {
      const auto piece = Trim(text.substr(start, j - start));
      if (!piece.empty()) pieces.emplace_back(piece);
      start = k;
      i = k;
    } else {
      i = j;
    }
  }
  const auto tail = Trim(text.substr(std::min(start, text.size())));
  if (!tail.empty()) pieces.emplace_back(tail);
  return pieces;
}

std::vector<std::string> SplitSentences(const RawDocument& doc) {
  std::vector<std::string> out;
  for (auto& piece : SplitAll(doc.text)) {
    if (piece.back() == '.' || piece.back() == '?') out.push_back(std::move(piece));
  }
  return out;
}

std::vector<std::string> NormalizeSpoken(std::string_view text) {
  std::vector<std::string> tokens;
  std::vector<char32_t> cps;
  std::vector<std::size_t> offsets;  // byte offset of each code point
  for (std::size_t pos = 0; pos < text.size();) {
    offsets.push_back(pos);
    cps.push_back(DecodeAt(text, pos));
  }
  offsets.push_back(text.size());

  auto emit_word = [&](std::size_t b, std::size_t e) {
    // Drop leading/trailing apostrophes; keep internal ones as written.
    while (b < e && IsApostrophe(cps[b])) ++b;
    while (e > b && IsApostrophe(cps[e - 1])) --e;
    if (b == e) return;
    std::string word;
    AppendUtf8(word, text, offsets[b], offsets[e]);
    tokens.push_back(Lower(word));
  };

  const std::size_t n = cps.size();
  std::size_t i = 0;
  while (i < n) {
    const char32_t cp = cps[i];
    if (IsDigit(cp)) {
      std::string integer;
      while (i < n) {
        if (IsDigit(cps[i])) {
          integer += static_cast<char>(cps[i]);
          ++i;
        } else if (cps[i] == ',' && i + 1 < n && IsDigit(cps[i + 1])) {
          ++i;  // digit grouping
        } else {
          break;
        }
      }
      std::string fraction;
      if (i + 1 < n && cps[i] == '.' && IsDigit(cps[i + 1])) {
        ++i;
        while (i < n && IsDigit(cps[i])) {
          fraction += static_cast<char>(cps[i]);
          ++i;
        }
      }
      for (auto& w : SpellDigits(integer)) tokens.push_back(std::move(w));
      if (!fraction.empty()) {
        tokens.emplace_back("point");
        for (char c : fraction) {
          for (auto& w : SpellDigits(std::string_view(&c, 1))) {
            tokens.push_back(std::move(w));
          }
        }
      }
      continue;
    }
    if (IsSpace(cp) || (IsPunct(cp) && !IsApostrophe(cp)) || cp == kInvalid) {
      ++i;
      continue;
    }
    const std::size_t b = i;
    while (i < n && !IsDigit(cps[i]) && !IsSpace(cps[i]) && cps[i] != kInvalid &&
           (!IsPunct(cps[i]) || IsApostrophe(cps[i]))) {
      ++i;
    }
    emit_word(b, i);
  }
  return tokens;
}

FilterResult FilterSentence(std::string_view raw) {
  FilterResult result;
  const auto s = Trim(raw);
  if (s.empty() || (s.back() != '.' && s.back() != '?')) {
    result.reason = RejectReason::kBadTerminal;
    return result;
  }
  for (std::size_t pos = 0; pos < s.size();) {
    const char32_t cp = DecodeAt(s, pos);
    if (cp == kInvalid || (IsPunct(cp) && !IsAllowedPunct(cp))) {
      result.reason = RejectReason::kForbiddenPunct;
      return result;
    }
  }
  auto tokens = NormalizeSpoken(s);
  if (tokens.empty()) {
    result.reason = RejectReason::kEmptyAfterNormalization;
    return result;
  }
  Sentence sentence;
  sentence.tokens = std::move(tokens);
  sentence.terminal = s.back() == '?' ? Terminal::kQuestion : Terminal::kPeriod;
  result.sentence = std::move(sentence);
  return result;
}

V2Examples MakeV2Examples(const Sentence& sentence) {
  V2Examples out;
  out.full.variant = ExampleVariant::kFull;
  out.full.tokens = sentence.tokens;
  out.full.tags.assign(sentence.tokens.size(), Tag::kO);
  if (!out.full.tags.empty()) out.full.tags.back() = Tag::kEos;
  if (sentence.tokens.size() > 1) {
    TrainingExample truncated;
    truncated.variant = ExampleVariant::kTruncated;
    truncated.tokens.assign(sentence.tokens.begin(), sentence.tokens.end() - 1);
    truncated.tags.assign(truncated.tokens.size(), Tag::kO);
    out.truncated = std::move(truncated);
  }
  return out;
}

std::vector<TrainingExample> MakeV3Examples(const Sentence& sentence,
                                            const Sentence* next) {
  std::vector<TrainingExample> out;
  if (next == nullptr || next->tokens.empty() || sentence.tokens.empty()) {
    return out;
  }
  TrainingExample example;
  example.variant = ExampleVariant::kLookahead;
  example.tokens = sentence.tokens;
  example.tokens.push_back(next->tokens.front());
  example.tags.assign(example.tokens.size(), Tag::kO);
  example.tags[example.tags.size() - 2] = Tag::kEos;
  out.push_back(std::move(example));
  return out;
}

std::vector<TrainingExample> BuildExamples(const std::vector<RawDocument>& docs,
                                           bool lookahead, CorpusStats* stats) {
  CorpusStats local;
  std::vector<TrainingExample> out;
  for (const auto& doc : docs) {
    ++local.documents;
    const auto pieces = SplitAll(doc.text);
    std::vector<Sentence> kept;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      auto result = FilterSentence(pieces[i]);
      if (!result.accepted()) {
        switch (*result.reason) {
          case RejectReason::kBadTerminal:
            ++local.rejected_bad_terminal;
            break;
          case RejectReason::kForbiddenPunct:
            ++local.rejected_forbidden_punct;
            break;
          case RejectReason::kEmptyAfterNormalization:
            ++local.rejected_empty;
            break;
        }
        continue;
      }
      result.sentence->doc_id = doc.doc_id;
      result.sentence->index_in_doc = i;
      kept.push_back(std::move(*result.sentence));
    }
    local.sentences_kept += kept.size();
    for (std::size_t k = 0; k < kept.size(); ++k) {
      auto v2 = MakeV2Examples(kept[k]);
      out.push_back(std::move(v2.full));
      ++local.full;
      if (v2.truncated) {
        out.push_back(std::move(*v2.truncated));
        ++local.truncated;
      }
      if (lookahead) {
        const Sentence* next = nullptr;
        if (k + 1 < kept.size() &&
            kept[k + 1].index_in_doc == kept[k].index_in_doc + 1) {
          next = &kept[k + 1];
        }
        for (auto& ex : MakeV3Examples(kept[k], next)) {
          out.push_back(std::move(ex));
          ++local.lookahead;
        }
      }
    }
  }
  if (stats) *stats = local;
  return out;
}

}  // namespace lmeos
