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

#ifndef PRIMESRL_SENSES_H_
#define PRIMESRL_SENSES_H_

#include <istream>
#include <string>
#include <vector>

#include "primesrl/corpus.h"
#include "primesrl/labels.h"

namespace primesrl {

// One line of a sense sidecar: "sent_index<TAB>token_index<TAB>lemma.sense"
// with 1-based indices. Props files carry no sense column; the sidecar
// supplies it.
struct SenseEntry {
  int sentence = 0;
  int anchor = 0;
  SenseLabel sense;
  int line = 0;
};

std::vector<SenseEntry> ParseSenseSidecar(std::istream& in,
                                          const std::string& source_name = {});

// Attaches each entry to the predicate at (sentence, anchor) and marks the
// corpus as carrying senses. Throws SrlError(kSidecar) for entries that name
// no predicate or name one twice.
void ApplySenses(Corpus& corpus, const std::vector<SenseEntry>& entries,
                 const std::string& source_name = {});

std::string SerializeSenseSidecar(const Corpus& corpus);

}  // namespace primesrl

#endif  // PRIMESRL_SENSES_H_
