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

#ifndef PRIMESRL_CORPUS_H_
#define PRIMESRL_CORPUS_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primesrl/labels.h"

namespace primesrl {

// How argument extents are represented: a single syntactic head per part
// (CoNLL-2008/2009) or a contiguous token run per part (CoNLL-2004/2005).
enum class Mode { kHead, kSpan };

std::string_view ModeName(Mode mode);
std::optional<Mode> ParseMode(std::string_view name);

// Inclusive run of 1-based token indices. In head mode first == last.
struct Extent {
  int first = 0;
  int last = 0;

  static Extent Single(int index) { return {index, index}; }

  int size() const { return last - first + 1; }
  bool Contains(int index) const { return first <= index && index <= last; }
  bool Overlaps(const Extent& o) const {
    return first <= o.last && o.first <= last;
  }

  friend auto operator<=>(const Extent&, const Extent&) = default;
};

struct Token {
  int index = 0;  // 1-based
  std::string form;
  bool is_predicate = false;
  std::optional<SenseLabel> sense;
  // Format-specific cells carried through untouched: LEMMA..PDEPREL for
  // CoNLL-2009, the target-verb column for CoNLL-2005.
  std::vector<std::string> columns;

  friend bool operator==(const Token&, const Token&) = default;
};

// One labeled part as it appears in the file, before continuation merging.
struct RawArgument {
  RoleLabel label;
  Extent extent;

  friend bool operator==(const RawArgument&, const RawArgument&) = default;
};

struct PredicateInstance {
  int anchor = 0;
  std::optional<SenseLabel> sense;
  std::vector<RawArgument> arguments;

  friend bool operator==(const PredicateInstance&,
                         const PredicateInstance&) = default;
};

struct Sentence {
  std::vector<Token> tokens;
  // Sorted by anchor; the k-th argument column belongs to the k-th entry.
  std::vector<PredicateInstance> predicates;

  const PredicateInstance* FindPredicate(int anchor) const;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Corpus {
  Mode mode = Mode::kHead;
  // False when the source carried no sense information at all (a props
  // file without a sidecar). Sense tests then pass trivially.
  bool has_senses = true;
  std::vector<Sentence> sentences;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

// Lists every violated structural invariant: contiguous 1-based token
// indices, anchors on predicate tokens, in-bounds extents, head-mode extents
// of size one, and no duplicate (label, extent) pairs. Empty means valid.
std::vector<std::string> CheckInvariants(const Corpus& corpus);

}  // namespace primesrl

#endif  // PRIMESRL_CORPUS_H_
