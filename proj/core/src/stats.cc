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

#include "primesrl/stats.h"

#include <utility>

#include "primesrl/errors.h"
#include "primesrl/labels.h"

namespace primesrl {

bool FullLabelOrder::operator()(const std::string& a,
                                const std::string& b) const {
  const RoleLabel la = RoleLabel::Parse(a);
  const RoleLabel lb = RoleLabel::Parse(b);
  BaseLabelOrder base_less;
  if (base_less(la.base(), lb.base())) return true;
  if (base_less(lb.base(), la.base())) return false;
  return std::pair(la.is_reference(), la.is_continuation()) <
         std::pair(lb.is_reference(), lb.is_continuation());
}

CorpusStats ComputeCorpusStats(const Corpus& corpus) {
  CorpusStats stats;
  stats.sentences = static_cast<std::int64_t>(corpus.sentences.size());
  for (const Sentence& sentence : corpus.sentences) {
    stats.predicates += static_cast<std::int64_t>(sentence.predicates.size());
    for (const PredicateInstance& pred : sentence.predicates) {
      for (const RawArgument& arg : pred.arguments) {
        if (!arg.label.is_scorable()) continue;
        ++stats.arguments;
        if (arg.label.is_continuation()) ++stats.continuations;
        if (arg.label.is_reference()) ++stats.references;
        ++stats.per_label[arg.label.ToString()];
      }
    }
  }
  if (stats.arguments == 0) {
    throw SrlError(ErrorKind::kEmptyCorpus, "corpus has no arguments");
  }
  const double total = static_cast<double>(stats.arguments);
  stats.pct_continuation = 100.0 * static_cast<double>(stats.continuations) / total;
  stats.pct_reference = 100.0 * static_cast<double>(stats.references) / total;
  return stats;
}

}  // namespace primesrl
