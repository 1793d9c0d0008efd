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

#ifndef LMEOS_NUMBER_WORDS_H_
#define LMEOS_NUMBER_WORDS_H_

#include <string>
#include <string_view>
#include <vector>

namespace lmeos {

// Spoken form of an integer in [0, 9999], e.g. 2024 -> "two thousand twenty
// four" (no "and", no hyphens). Throws Error(kInvalidArgument) out of range.
std::vector<std::string> SpellInteger(int value);

// Spoken form of a digit string. Values up to 9999 without a leading zero
// are spelled as integers; anything else is read digit by digit.
std::vector<std::string> SpellDigits(std::string_view digits);

}  // namespace lmeos

#endif  // LMEOS_NUMBER_WORDS_H_
