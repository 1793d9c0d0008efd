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

#include "lmeos/error.h"

namespace lmeos {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kInvalidUtf8: return "INVALID_UTF8";
    case ErrorCode::kEmptyCorpus: return "EMPTY_CORPUS";
    case ErrorCode::kDimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::kNonfiniteLoss: return "NONFINITE_LOSS";
    case ErrorCode::kUnknownState: return "UNKNOWN_STATE";
    case ErrorCode::kIoError: return "IO_ERROR";
    case ErrorCode::kBadMagic: return "BAD_MAGIC";
    case ErrorCode::kVersionUnsupported: return "VERSION_UNSUPPORTED";
    case ErrorCode::kChecksumMismatch: return "CHECKSUM_MISMATCH";
    case ErrorCode::kUnsortedStream: return "UNSORTED_STREAM";
    case ErrorCode::kOverlappingEvents: return "OVERLAPPING_EVENTS";
    case ErrorCode::kModelModeMismatch: return "MODEL_MODE_MISMATCH";
    case ErrorCode::kModelRequired: return "MODEL_REQUIRED";
    case ErrorCode::kTokenMismatch: return "TOKEN_MISMATCH";
    case ErrorCode::kLengthMismatch: return "LENGTH_MISMATCH";
    case ErrorCode::kZeroBaseline: return "ZERO_BASELINE";
    case ErrorCode::kParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace lmeos
