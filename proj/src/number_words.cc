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

#include "lmeos/number_words.h"

#include <array>

#include "lmeos/error.h"

namespace lmeos {
namespace {

constexpr std::array<const char*, 20> kOnes = {
    "zero",    "one",     "two",       "three",    "four",
    "five",    "six",     "seven",     "eight",    "nine",
    "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
    "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};

constexpr std::array<const char*, 10> kTens = {
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty",
    "ninety"};

// 1..99
void AppendBelowHundred(int value, std::vector<std::string>& out) {
  if (value < 20) {
    out.emplace_back(kOnes[value]);
    return;
  }
  out.emplace_back(kTens[value / 10]);
  if (value % 10 != 0) out.emplace_back(kOnes[value % 10]);
}

}  // namespace

std::vector<std::string> SpellInteger(int value) {
  if (value < 0 || value > 9999) {
    throw Error(ErrorCode::kInvalidArgument,
                "SpellInteger out of range: " + std::to_string(value));
  }
  std::vector<std::string> out;
  if (value == 0) {
    out.emplace_back(kOnes[0]);
    return out;
  }
  if (value >= 1000) {
    out.emplace_back(kOnes[value / 1000]);
    out.emplace_back("thousand");
    value %= 1000;
  }
  if (value >= 100) {
    out.emplace_back(kOnes[value / 100]);
    out.emplace_back("hundred");
    value %= 100;
  }
  if (value > 0) AppendBelowHundred(value, out);
  return out;
}

std::vector<std::string> SpellDigits(std::string_view digits) {
  std::vector<std::string> out;
  if (digits.empty()) return out;
  const bool leading_zero = digits.size() > 1 && digits.front() == '0';
  if (!leading_zero && digits.size() <= 4) {
    int value = 0;
    for (char c : digits) value = value * 10 + (c - '0');
    return SpellInteger(value);
  }
  for (char c : digits) out.emplace_back(kOnes[c - '0']);
  return out;
}

}  // namespace lmeos
