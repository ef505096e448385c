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

#ifndef PRIMESRL_ERRORS_H_
#define PRIMESRL_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace primesrl {

enum class ErrorKind {
  // Input file defects.
  kColumnCountMismatch,
  kMalformedRow,
  kDanglingApredColumn,
  kMalformedLabel,
  kUnknownLabel,
  kUnbalancedBracket,
  kOverlappingSpan,
  kAnchorMissing,
  kSidecar,
  kMissingGoldSense,
  kEmptyCorpus,
  // Gold/system disagreement.
  kSentenceCountMismatch,
  kTokenMismatch,
  // Tool misuse.
  kModeMismatch,
  kConfig,
};

// Coarse failure class; the CLI maps these onto exit codes.
enum class ErrorClass { kParse, kAlign, kConfig };

std::string_view ErrorKindName(ErrorKind kind);
ErrorClass ClassOf(ErrorKind kind);

// Every failure raised by the library. `line` is 1-based, 0 when the error
// is not tied to a particular input line.
class SrlError : public std::runtime_error {
 public:
  SrlError(ErrorKind kind, std::string message, std::string source = {},
           int line = 0);

  ErrorKind kind() const { return kind_; }
  ErrorClass error_class() const { return ClassOf(kind_); }
  const std::string& source() const { return source_; }
  int line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string source_;
  int line_;
  std::string detail_;
};

}  // namespace primesrl

#endif  // PRIMESRL_ERRORS_H_
