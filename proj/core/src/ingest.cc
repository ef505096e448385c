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

#include "primesrl/ingest.h"

#include <cctype>

#include "primesrl/errors.h"

namespace primesrl {

void Diagnostics::Warn(std::string_view source, int line,
                       std::string_view message) {
  std::string out(source);
  if (line > 0) out += ":" + std::to_string(line);
  if (!out.empty()) out += ": ";
  out += message;
  warnings.push_back(std::move(out));
}

namespace internal {

std::vector<std::string_view> SplitColumns(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool IsBlank(std::string_view line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

RoleLabel ParseLabelCell(std::string_view cell, const ParseOptions& options,
                         int line, Diagnostics* diagnostics) {
  RoleLabel label = [&] {
    try {
      return RoleLabel::Parse(cell);
    } catch (const SrlError& e) {
      throw SrlError(e.kind(), e.detail(), options.source_name, line);
    }
  }();
  if (label.family() == RoleFamily::kOther) {
    if (options.unknown_labels == UnknownLabelPolicy::kReject) {
      throw SrlError(ErrorKind::kUnknownLabel,
                     "unknown role label '" + std::string(cell) + "'",
                     options.source_name, line);
    }
    if (diagnostics != nullptr) {
      diagnostics->Warn(options.source_name, line,
                        "unknown role label '" + std::string(cell) +
                            "' scored as a modifier");
    }
  }
  return label;
}

}  // namespace internal
}  // namespace primesrl
