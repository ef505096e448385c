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

#include "primesrl/normalize.h"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

namespace primesrl {
namespace {

void AddPart(MergedArgument& unit, const RawArgument& part, Mode mode) {
  if (mode == Mode::kHead) {
    unit.tokens.push_back(part.extent.first);
  } else {
    for (int i = part.extent.first; i <= part.extent.last; ++i) {
      unit.tokens.push_back(i);
    }
  }
  ++unit.part_count;
}

void Finish(MergedArgument& unit) {
  std::sort(unit.tokens.begin(), unit.tokens.end());
  unit.tokens.erase(std::unique(unit.tokens.begin(), unit.tokens.end()),
                    unit.tokens.end());
}

}  // namespace

std::vector<MergedArgument> MergeContinuations(const PredicateInstance& pred,
                                               Mode mode) {
  std::map<RoleLabel, std::vector<const RawArgument*>> groups;
  for (const RawArgument& arg : pred.arguments) {
    if (!arg.label.is_scorable()) continue;
    groups[arg.label.WithContinuation(false)].push_back(&arg);
  }

  std::vector<MergedArgument> units;
  for (auto& [key, parts] : groups) {
    std::sort(parts.begin(), parts.end(),
              [](const RawArgument* a, const RawArgument* b) {
                return a->extent < b->extent;
              });
    std::vector<size_t> heads;  // positions in `parts` without C-
    for (size_t i = 0; i < parts.size(); ++i) {
      if (!parts[i]->label.is_continuation()) heads.push_back(i);
    }

    if (heads.size() <= 1) {
      MergedArgument unit{key, {}, 0, !parts.front()->label.is_continuation()};
      for (const RawArgument* part : parts) AddPart(unit, *part, mode);
      Finish(unit);
      units.push_back(std::move(unit));
      continue;
    }

    std::vector<MergedArgument> group;
    std::vector<size_t> owner(parts.size(), 0);
    size_t current = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (!parts[i]->label.is_continuation()) {
        current = static_cast<size_t>(
            std::find(heads.begin(), heads.end(), i) - heads.begin());
      }
      owner[i] = current;
    }
    for (size_t h = 0; h < heads.size(); ++h) {
      group.push_back(MergedArgument{key, {}, 0, false});
    }
    for (size_t i = 0; i < parts.size(); ++i) {
      MergedArgument& unit = group[owner[i]];
      if (unit.part_count == 0) {
        unit.first_part_is_base = !parts[i]->label.is_continuation();
      }
      AddPart(unit, *parts[i], mode);
    }
    for (MergedArgument& unit : group) {
      Finish(unit);
      units.push_back(std::move(unit));
    }
  }

  std::sort(units.begin(), units.end(),
            [](const MergedArgument& a, const MergedArgument& b) {
              return std::tie(a.tokens.front(), a.base_label) <
                     std::tie(b.tokens.front(), b.base_label);
            });
  return units;
}

std::vector<ResolvedArgument> ResolveReferences(
    std::vector<MergedArgument> units) {
  std::vector<ResolvedArgument> out;
  out.reserve(units.size());
  for (MergedArgument& unit : units) out.push_back({std::move(unit), {}});
  for (ResolvedArgument& ref : out) {
    if (!ref.is_reference()) continue;
    for (size_t j = 0; j < out.size(); ++j) {
      const RoleLabel& candidate = out[j].unit.base_label;
      if (!candidate.is_reference() &&
          candidate.base() == ref.unit.base_label.base()) {
        ref.referents.push_back(j);
      }
    }
  }
  return out;
}

}  // namespace primesrl
