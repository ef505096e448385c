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

#include "primesrl/corpus.h"

#include <algorithm>
#include <set>
#include <utility>

namespace primesrl {

std::string_view ModeName(Mode mode) {
  return mode == Mode::kHead ? "head" : "span";
}

std::optional<Mode> ParseMode(std::string_view name) {
  if (name == "head") return Mode::kHead;
  if (name == "span") return Mode::kSpan;
  return std::nullopt;
}

const PredicateInstance* Sentence::FindPredicate(int anchor) const {
  auto it = std::lower_bound(
      predicates.begin(), predicates.end(), anchor,
      [](const PredicateInstance& p, int a) { return p.anchor < a; });
  if (it == predicates.end() || it->anchor != anchor) return nullptr;
  return &*it;
}

std::vector<std::string> CheckInvariants(const Corpus& corpus) {
  std::vector<std::string> problems;
  for (size_t s = 0; s < corpus.sentences.size(); ++s) {
    const Sentence& sentence = corpus.sentences[s];
    const std::string where = "sentence " + std::to_string(s + 1) + ": ";
    const int n = static_cast<int>(sentence.tokens.size());
    for (int i = 0; i < n; ++i) {
      if (sentence.tokens[i].index != i + 1) {
        problems.push_back(where + "token indices are not contiguous");
        break;
      }
    }
    int previous_anchor = 0;
    for (const PredicateInstance& pred : sentence.predicates) {
      if (pred.anchor <= previous_anchor) {
        problems.push_back(where + "predicates not sorted by anchor");
      }
      previous_anchor = pred.anchor;
      if (pred.anchor < 1 || pred.anchor > n ||
          !sentence.tokens[pred.anchor - 1].is_predicate) {
        problems.push_back(where + "anchor " + std::to_string(pred.anchor) +
                           " is not a predicate token");
      }
      std::set<std::pair<std::string, Extent>> seen;
      for (const RawArgument& arg : pred.arguments) {
        if (arg.extent.first < 1 || arg.extent.last > n ||
            arg.extent.first > arg.extent.last) {
          problems.push_back(where + "argument extent out of bounds");
        }
        if (corpus.mode == Mode::kHead && arg.extent.size() != 1) {
          problems.push_back(where + "multi-token extent in head mode");
        }
        if (!seen.emplace(arg.label.ToString(), arg.extent).second) {
          problems.push_back(where + "duplicate argument " +
                             arg.label.ToString());
        }
      }
    }
  }
  return problems;
}

}  // namespace primesrl
