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

#ifndef PRIMESRL_NORMALIZE_H_
#define PRIMESRL_NORMALIZE_H_

#include <cstddef>
#include <vector>

#include "primesrl/corpus.h"
#include "primesrl/labels.h"

namespace primesrl {

// A whole argument after continuation parts have been folded together.
struct MergedArgument {
  RoleLabel base_label;     // is_continuation() is always false
  std::vector<int> tokens;  // sorted, unique, non-empty
  int part_count = 0;
  bool first_part_is_base = false;  // leftmost part carried no C- prefix

  friend bool operator==(const MergedArgument&,
                         const MergedArgument&) = default;
};

// Folds the scorable arguments of one predicate into whole arguments.
//
// Parts sharing (base, reference flag) form one argument no matter which of
// them carry the C- prefix, so {C-A0@3, A0@12} and {A0@3, C-A0@12} both give
// A0{3,12}, and an orphan C-X still yields an argument labeled X. When two or
// more parts of a group are unprefixed, each unprefixed part starts its own
// argument and every C- part joins the nearest unprefixed part to its left
// (or the leftmost one when none precedes it).
//
// In head mode each part contributes its head token; in span mode its whole
// extent. V parts are dropped. Output is ordered by first token.
std::vector<MergedArgument> MergeContinuations(const PredicateInstance& pred,
                                               Mode mode);

struct ResolvedArgument {
  MergedArgument unit;
  // Indices of the non-reference arguments with the same base. Only
  // meaningful when unit.base_label.is_reference().
  std::vector<std::size_t> referents;

  bool is_reference() const { return unit.base_label.is_reference(); }
  bool is_dangling() const { return is_reference() && referents.empty(); }
  bool is_ambiguous() const { return is_reference() && referents.size() > 1; }
};

// Links every R-X argument to the X arguments of the same predicate.
// Indices refer to positions in the returned vector, which keeps the input
// order.
std::vector<ResolvedArgument> ResolveReferences(
    std::vector<MergedArgument> units);

}  // namespace primesrl

#endif  // PRIMESRL_NORMALIZE_H_
