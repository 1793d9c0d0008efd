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

#ifndef LMEOS_MODEL_IO_H_
#define LMEOS_MODEL_IO_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lmeos/tagger.h"

namespace lmeos {

inline constexpr char kModelMagic[] = "LMEOS1";
inline constexpr std::uint32_t kModelFormatVersion = 1;

// Model file layout, all integers little-endian:
//
//   magic       6 bytes "LMEOS1"
//   version     u32
//   header      u32 vocab_size, u32 embed_dim, u32 hidden_dim,
//               u8 lookahead, u64 seed
//   training    u32 max_vocab, u32 min_frequency, f64 learning_rate,
//               f64 clip_norm, f64 init_scale, u32 max_epochs, u32 patience
//   vocabulary  vocab_size x (u32 byte length, UTF-8 bytes), in id order
//   parameters  f32 values in LstmParams order
//   crc32       u32 over every preceding byte
std::vector<std::uint8_t> SerializeModel(const TaggerModel& model);

// Throws Error with kBadMagic, kChecksumMismatch, kVersionUnsupported or
// kParseError.
TaggerModel DeserializeModel(const std::vector<std::uint8_t>& bytes);

// Throw Error(kIoError) on filesystem failures.
void SaveModel(const TaggerModel& model, const std::filesystem::path& path);
TaggerModel LoadModel(const std::filesystem::path& path);

}  // namespace lmeos

#endif  // LMEOS_MODEL_IO_H_
