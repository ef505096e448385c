// Copyright 2026 The PrimeSRL Authors.
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

#include "primesrl/errors.h"

#include <utility>

namespace primesrl {
namespace {

std::string Decorate(ErrorKind kind, const std::string& message,
                     const std::string& source, int line) {
  std::string out;
  if (!source.empty()) {
    out += source;
    if (line > 0) out += ":" + std::to_string(line);
    out += ": ";
  } else if (line > 0) {
    out += "line " + std::to_string(line) + ": ";
  }
  out += ErrorKindName(kind);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kColumnCountMismatch: return "ColumnCountMismatch";
    case ErrorKind::kMalformedRow: return "MalformedRow";
    case ErrorKind::kDanglingApredColumn: return "DanglingApredColumn";
    case ErrorKind::kMalformedLabel: return "MalformedLabel";
    case ErrorKind::kUnknownLabel: return "UnknownLabel";
    case ErrorKind::kUnbalancedBracket: return "UnbalancedBracket";
    case ErrorKind::kOverlappingSpan: return "OverlappingSpan";
    case ErrorKind::kAnchorMissing: return "AnchorMissing";
    case ErrorKind::kSidecar: return "SenseSidecarError";
    case ErrorKind::kMissingGoldSense: return "MissingGoldSense";
    case ErrorKind::kEmptyCorpus: return "EmptyCorpus";
    case ErrorKind::kSentenceCountMismatch: return "SentenceCountMismatch";
    case ErrorKind::kTokenMismatch: return "TokenMismatch";
    case ErrorKind::kModeMismatch: return "ModeMismatch";
    case ErrorKind::kConfig: return "ConfigError";
  }
  return "Error";
}

ErrorClass ClassOf(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSentenceCountMismatch:
    case ErrorKind::kTokenMismatch:
      return ErrorClass::kAlign;
    case ErrorKind::kModeMismatch:
    case ErrorKind::kConfig:
      return ErrorClass::kConfig;
    default:
      return ErrorClass::kParse;
  }
}

SrlError::SrlError(ErrorKind kind, std::string message, std::string source,
                   int line)
    : std::runtime_error(Decorate(kind, message, source, line)),
      kind_(kind),
      source_(std::move(source)),
      line_(line),
      detail_(std::move(message)) {}

}  // namespace primesrl
