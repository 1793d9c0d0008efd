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

#include "lmeos/model_io.h"

#include <zlib.h>

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "lmeos/error.h"

namespace lmeos {
namespace {

constexpr std::size_t kMagicSize = sizeof(kModelMagic) - 1;

class Writer {
 public:
  template <typename T>
  void Put(T value) {
    static_assert(std::is_trivially_copyable_v<T>);
    if constexpr (sizeof(T) > 1 && std::endian::native == std::endian::big) {
      value = ByteSwap(value);
    }
    const auto* p = reinterpret_cast<const std::uint8_t*>(&value);
    bytes_.insert(bytes_.end(), p, p + sizeof(T));
  }
  void PutBytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const std::uint8_t*>(data);
    bytes_.insert(bytes_.end(), p, p + n);
  }
  std::vector<std::uint8_t>& bytes() { return bytes_; }

  template <typename T>
  static T ByteSwap(T value) {
    std::uint8_t raw[sizeof(T)];
    std::memcpy(raw, &value, sizeof(T));
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(raw[i], raw[sizeof(T) - 1 - i]);
    std::memcpy(&value, raw, sizeof(T));
    return value;
  }

 private:
  std::vector<std::uint8_t> bytes_;
};

class Reader {
 public:
  Reader(const std::vector<std::uint8_t>& bytes, std::size_t begin, std::size_t end)
      : bytes_(bytes), pos_(begin), end_(end) {}

  template <typename T>
  T Get() {
    Need(sizeof(T));
    T value;
    std::memcpy(&value, bytes_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    if constexpr (sizeof(T) > 1 && std::endian::native == std::endian::big) {
      value = Writer::ByteSwap(value);
    }
    return value;
  }
  std::string GetString(std::size_t n) {
    Need(n);
    std::string s(reinterpret_cast<const char*>(bytes_.data() + pos_), n);
    pos_ += n;
    return s;
  }
  bool AtEnd() const { return pos_ == end_; }

 private:
  void Need(std::size_t n) const {
    if (end_ - pos_ < n) throw Error(ErrorCode::kParseError, "model file body is short");
  }

  const std::vector<std::uint8_t>& bytes_;
  std::size_t pos_;
  std::size_t end_;
};

std::uint32_t Crc32(const std::uint8_t* data, std::size_t n) {
  uLong crc = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths.
  while (n > 0) {
    const auto chunk = static_cast<uInt>(std::min<std::size_t>(n, 1u << 30));
    crc = crc32(crc, data, chunk);
    data += chunk;
    n -= chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

}  // namespace

std::vector<std::uint8_t> SerializeModel(const TaggerModel& model) {
  const LstmDims& dims = model.params.dims();
  if (dims.vocab != model.vocab.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "vocabulary and parameters disagree");
  }
  const Hyperparams& hp = model.hyperparams;
  Writer w;
  w.PutBytes(kModelMagic, kMagicSize);
  w.Put<std::uint32_t>(kModelFormatVersion);
  w.Put<std::uint32_t>(static_cast<std::uint32_t>(dims.vocab));
  w.Put<std::uint32_t>(static_cast<std::uint32_t>(dims.embed));
  w.Put<std::uint32_t>(static_cast<std::uint32_t>(dims.hidden));
  w.Put<std::uint8_t>(model.lookahead ? 1 : 0);
  w.Put<std::uint64_t>(model.seed);
  w.Put<std::uint32_t>(static_cast<std::uint32_t>(hp.max_vocab));
  w.Put<std::uint32_t>(static_cast<std::uint32_t>(hp.min_frequency));
  w.Put<double>(hp.learning_rate);
  w.Put<double>(hp.clip_norm);
  w.Put<double>(hp.init_scale);
  w.Put<std::uint32_t>(static_cast<std::uint32_t>(hp.max_epochs));
  w.Put<std::uint32_t>(static_cast<std::uint32_t>(hp.patience));
  for (const auto& token : model.vocab.tokens()) {
    w.Put<std::uint32_t>(static_cast<std::uint32_t>(token.size()));
    w.PutBytes(token.data(), token.size());
  }
  for (double v : model.params.values()) w.Put<float>(static_cast<float>(v));
  const std::uint32_t crc = Crc32(w.bytes().data(), w.bytes().size());
  w.Put<std::uint32_t>(crc);
  return std::move(w.bytes());
}

TaggerModel DeserializeModel(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < kMagicSize ||
      std::memcmp(bytes.data(), kModelMagic, kMagicSize) != 0) {
    throw Error(ErrorCode::kBadMagic, "not an LM-EOS model file");
  }
  if (bytes.size() < kMagicSize + 4) {
    throw Error(ErrorCode::kChecksumMismatch, "model file is truncated");
  }
  const std::size_t body_end = bytes.size() - 4;
  Reader crc_reader(bytes, body_end, bytes.size());
  const auto stored = crc_reader.Get<std::uint32_t>();
  if (stored != Crc32(bytes.data(), body_end)) {
    throw Error(ErrorCode::kChecksumMismatch, "model file checksum does not match");
  }

  Reader r(bytes, kMagicSize, body_end);
  const auto version = r.Get<std::uint32_t>();
  if (version != kModelFormatVersion) {
    throw Error(ErrorCode::kVersionUnsupported,
                "model format version " + std::to_string(version));
  }
  TaggerModel model;
  LstmDims dims;
  dims.vocab = r.Get<std::uint32_t>();
  dims.embed = r.Get<std::uint32_t>();
  dims.hidden = r.Get<std::uint32_t>();
  model.lookahead = r.Get<std::uint8_t>() != 0;
  model.seed = r.Get<std::uint64_t>();
  Hyperparams& hp = model.hyperparams;
  hp.embed_dim = dims.embed;
  hp.hidden_dim = dims.hidden;
  hp.max_vocab = r.Get<std::uint32_t>();
  hp.min_frequency = r.Get<std::uint32_t>();
  hp.learning_rate = r.Get<double>();
  hp.clip_norm = r.Get<double>();
  hp.init_scale = r.Get<double>();
  hp.max_epochs = r.Get<std::uint32_t>();
  hp.patience = r.Get<std::uint32_t>();

  std::vector<std::string> tokens;
  tokens.reserve(dims.vocab);
  for (std::size_t i = 0; i < dims.vocab; ++i) {
    const auto len = r.Get<std::uint32_t>();
    tokens.push_back(r.GetString(len));
  }
  model.vocab = Vocabulary(std::move(tokens));
  model.params = LstmParams(dims);
  for (double& v : model.params.values()) v = static_cast<double>(r.Get<float>());
  if (!r.AtEnd()) throw Error(ErrorCode::kParseError, "trailing bytes in model file");
  return model;
}

void SaveModel(const TaggerModel& model, const std::filesystem::path& path) {
  const auto bytes = SerializeModel(model);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path.string());
}

TaggerModel LoadModel(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failed for " + path.string());
  return DeserializeModel(bytes);
}

}  // namespace lmeos
