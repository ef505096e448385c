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

#ifndef PRIMESRL_INGEST_H_
#define PRIMESRL_INGEST_H_

#include <string>
#include <string_view>
#include <vector>

#include "primesrl/labels.h"

namespace primesrl {

struct ParseOptions {
  // File name used in error messages and warnings.
  std::string source_name;
  UnknownLabelPolicy unknown_labels = UnknownLabelPolicy::kTreatAsModifier;
};

// Recoverable problems found while reading. Parsers append here when given a
// non-null sink and otherwise stay silent.
struct Diagnostics {
  std::vector<std::string> warnings;

  void Warn(std::string_view source, int line, std::string_view message);
};

namespace internal {

// Whitespace tokenizer shared by the columnar readers; tabs and runs of
// spaces are both separators.
std::vector<std::string_view> SplitColumns(std::string_view line);

bool IsBlank(std::string_view line);

// Parses one label cell and applies the unknown-label policy. Errors carry
// `source` and `line`.
RoleLabel ParseLabelCell(std::string_view cell, const ParseOptions& options,
                         int line, Diagnostics* diagnostics);

}  // namespace internal
}  // namespace primesrl

#endif  // PRIMESRL_INGEST_H_
