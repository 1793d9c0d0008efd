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

#include "config.h"

#include <charconv>
#include <fstream>

#include "lmeos/error.h"

namespace lmeos::cli {
namespace {

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T ParseNumber(const std::string& key, const std::string& value) {
  T out{};
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::kParseError, "bad value for " + key + ": \"" + value + "\"");
  }
  return out;
}

}  // namespace

std::map<std::string, std::string> ReadConfigFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open config " + path.string());
  std::map<std::string, std::string> values;
  RunConfig probe;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = path.string() + ":" + std::to_string(lineno) + ": ";
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kParseError, where + "expected key=value");
    }
    const std::string key = Trim(line.substr(0, eq));
    const std::string value = Trim(line.substr(eq + 1));
    try {
      ApplyConfigValue(probe, key, value);
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseError, where + e.what());
    }
    values[key] = value;
  }
  return values;
}

void ApplyConfigValue(RunConfig& config, const std::string& key, const std::string& value) {
  if (key == "mode") {
    const auto mode = ParsePolicyMode(value);
    if (!mode) throw Error(ErrorCode::kParseError, "mode must be v1, v2 or v3");
    config.policy.mode = *mode;
  } else if (key == "silence_ms") {
    config.policy.silence_threshold_ms = ParseNumber<std::int64_t>(key, value);
  } else if (key == "hard_timeout_ms") {
    config.policy.hard_timeout_ms = ParseNumber<std::int64_t>(key, value);
  } else if (key == "lm_threshold") {
    config.policy.lm_threshold = ParseNumber<double>(key, value);
  } else if (key == "lookahead_wait_ms") {
    config.policy.lookahead_wait_ms = ParseNumber<std::int64_t>(key, value);
  } else if (key == "model") {
    config.model_path = value;
  } else if (key == "seed") {
    config.seed = ParseNumber<std::uint64_t>(key, value);
  } else if (key == "format") {
    if (value == "text") {
      config.format = ReportFormat::kText;
    } else if (value == "json") {
      config.format = ReportFormat::kJson;
    } else {
      throw Error(ErrorCode::kParseError, "format must be text or json");
    }
  } else if (key == "embed_dim") {
    config.hyperparams.embed_dim = ParseNumber<std::size_t>(key, value);
  } else if (key == "hidden_dim") {
    config.hyperparams.hidden_dim = ParseNumber<std::size_t>(key, value);
  } else if (key == "max_vocab") {
    config.hyperparams.max_vocab = ParseNumber<std::size_t>(key, value);
  } else if (key == "min_frequency") {
    config.hyperparams.min_frequency = ParseNumber<std::size_t>(key, value);
  } else if (key == "learning_rate") {
    config.hyperparams.learning_rate = ParseNumber<double>(key, value);
  } else if (key == "clip_norm") {
    config.hyperparams.clip_norm = ParseNumber<double>(key, value);
  } else if (key == "max_epochs") {
    config.hyperparams.max_epochs = ParseNumber<std::size_t>(key, value);
  } else if (key == "patience") {
    config.hyperparams.patience = ParseNumber<std::size_t>(key, value);
  } else if (key == "heldout_fraction") {
    config.heldout_fraction = ParseNumber<double>(key, value);
  } else {
    throw Error(ErrorCode::kParseError, "unknown config key \"" + key + "\"");
  }
}

}  // namespace lmeos::cli
