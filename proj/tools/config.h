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

#ifndef LMEOS_TOOLS_CONFIG_H_
#define LMEOS_TOOLS_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "lmeos/fusion.h"
#include "lmeos/tagger.h"

namespace lmeos::cli {

enum class ReportFormat { kText, kJson };

// Everything a run can be configured with. Defaults first, then the config
// file, then command-line flags.
struct RunConfig {
  Policy policy;
  std::optional<std::filesystem::path> model_path;
  std::uint64_t seed = 1;
  ReportFormat format = ReportFormat::kText;
  Hyperparams hyperparams;
  double heldout_fraction = 0.1;
};

// key=value lines; '#' starts a comment; blank lines are ignored. Keys:
//   mode, silence_ms, hard_timeout_ms, lm_threshold, lookahead_wait_ms,
//   model, seed, format, embed_dim, hidden_dim, max_vocab, min_frequency,
//   learning_rate, clip_norm, max_epochs, patience, heldout_fraction
// Throws Error(kParseError) with "path:line:" on malformed lines and
// unknown keys.
std::map<std::string, std::string> ReadConfigFile(const std::filesystem::path& path);

// Applies one key. Throws Error(kParseError) for unknown keys or bad values.
void ApplyConfigValue(RunConfig& config, const std::string& key, const std::string& value);

}  // namespace lmeos::cli

#endif  // LMEOS_TOOLS_CONFIG_H_
