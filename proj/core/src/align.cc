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

#include "primesrl/align.h"

#include <string>

#include "primesrl/errors.h"

namespace primesrl {

AlignedCorpus Align(const Corpus& gold, const Corpus& system) {
  if (gold.mode != system.mode) {
    throw SrlError(ErrorKind::kModeMismatch,
                   "gold is " + std::string(ModeName(gold.mode)) +
                       "-based but system is " +
                       std::string(ModeName(system.mode)) + "-based");
  }
  if (gold.sentences.size() != system.sentences.size()) {
    throw SrlError(ErrorKind::kSentenceCountMismatch,
                   "gold has " + std::to_string(gold.sentences.size()) +
                       " sentences, system has " +
                       std::to_string(system.sentences.size()));
  }

  AlignedCorpus aligned;
  aligned.mode = gold.mode;
  aligned.gold_has_senses = gold.has_senses;
  aligned.system_has_senses = system.has_senses;
  aligned.sentences.reserve(gold.sentences.size());

  for (size_t s = 0; s < gold.sentences.size(); ++s) {
    const Sentence& g = gold.sentences[s];
    const Sentence& y = system.sentences[s];
    const std::string where = "sentence " + std::to_string(s + 1);
    if (g.tokens.size() != y.tokens.size()) {
      throw SrlError(ErrorKind::kTokenMismatch,
                     where + ": gold has " + std::to_string(g.tokens.size()) +
                         " tokens, system has " +
                         std::to_string(y.tokens.size()));
    }
    for (size_t t = 0; t < g.tokens.size(); ++t) {
      const std::string& a = g.tokens[t].form;
      const std::string& b = y.tokens[t].form;
      if (!a.empty() && !b.empty() && a != b) {
        throw SrlError(ErrorKind::kTokenMismatch,
                       where + " token " + std::to_string(t + 1) + ": gold '" +
                           a + "' vs system '" + b + "'");
      }
    }

    AlignedSentence out;
    out.gold = &g;
    out.system = &y;
    auto gi = g.predicates.begin();
    auto yi = y.predicates.begin();
    while (gi != g.predicates.end() || yi != y.predicates.end()) {
      if (yi == y.predicates.end() ||
          (gi != g.predicates.end() && gi->anchor < yi->anchor)) {
        out.pairs.push_back({gi->anchor, &*gi, nullptr});
        ++gi;
      } else if (gi == g.predicates.end() || yi->anchor < gi->anchor) {
        out.pairs.push_back({yi->anchor, nullptr, &*yi});
        ++yi;
      } else {
        out.pairs.push_back({gi->anchor, &*gi, &*yi});
        ++gi;
        ++yi;
      }
    }
    aligned.sentences.push_back(std::move(out));
  }
  return aligned;
}

}  // namespace primesrl
