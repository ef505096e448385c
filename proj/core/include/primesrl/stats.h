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

#ifndef PRIMESRL_STATS_H_
#define PRIMESRL_STATS_H_

#include <cstdint>
#include <map>
#include <string>

#include "primesrl/corpus.h"

namespace primesrl {

// Full labels (prefixes kept) in report order.
struct FullLabelOrder {
  bool operator()(const std::string& a, const std::string& b) const;
};

struct CorpusStats {
  std::int64_t sentences = 0;
  std::int64_t predicates = 0;
  std::int64_t arguments = 0;     // raw parts, V excluded
  std::int64_t continuations = 0;  // parts with a C- prefix
  std::int64_t references = 0;     // parts with an R- prefix
  double pct_continuation = 0.0;
  double pct_reference = 0.0;
  std::map<std::string, std::int64_t, FullLabelOrder> per_label;
};

// Percentages are over raw argument parts before merging. Throws
// SrlError(kEmptyCorpus) when there are no arguments.
CorpusStats ComputeCorpusStats(const Corpus& corpus);

}  // namespace primesrl

#endif  // PRIMESRL_STATS_H_
