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

#ifndef PRIMESRL_ALIGN_H_
#define PRIMESRL_ALIGN_H_

#include <vector>

#include "primesrl/corpus.h"

namespace primesrl {

// A gold and a system predicate at the same anchor. `system` is null for a
// missed gold predicate, `gold` is null for a spurious system predicate.
struct PredicatePair {
  int anchor = 0;
  const PredicateInstance* gold = nullptr;
  const PredicateInstance* system = nullptr;

  bool is_paired() const { return gold != nullptr && system != nullptr; }
  bool is_missed() const { return gold != nullptr && system == nullptr; }
  bool is_spurious() const { return gold == nullptr && system != nullptr; }
};

struct AlignedSentence {
  const Sentence* gold = nullptr;
  const Sentence* system = nullptr;
  std::vector<PredicatePair> pairs;  // sorted by anchor
};

// Views into the two corpora passed to Align; both must outlive it.
struct AlignedCorpus {
  Mode mode = Mode::kHead;
  bool gold_has_senses = true;
  bool system_has_senses = true;
  std::vector<AlignedSentence> sentences;
};

// Pairs predicates by anchor token. Requires equal sentence counts, equal
// token counts per sentence and equal forms where both sides have them.
// Throws SrlError(kSentenceCountMismatch), SrlError(kTokenMismatch) naming
// the first divergent sentence and token, or SrlError(kModeMismatch).
AlignedCorpus Align(const Corpus& gold, const Corpus& system);

}  // namespace primesrl

#endif  // PRIMESRL_ALIGN_H_
