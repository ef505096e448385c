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

#ifndef PRIMESRL_SCORING_H_
#define PRIMESRL_SCORING_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primesrl/align.h"
#include "primesrl/corpus.h"
#include "primesrl/counts.h"
#include "primesrl/labels.h"

namespace primesrl {

enum class Metric {
  kPrimeSrl,    // sense-conditioned, whole-argument, reference-aware
  kLegacyHead,  // CoNLL-2009 style: every labeled head scored independently
  kLegacySpan,  // CoNLL-2005 style: left-to-right chained spans
};

std::string_view MetricName(Metric metric);
std::optional<Metric> ParseMetric(std::string_view name);

// Keyed by base label (prefixes stripped), in report order.
using PerLabelCounts = std::map<std::string, EvalCounts, BaseLabelOrder>;

struct ArgumentScore {
  EvalCounts counts;
  PerLabelCounts per_label;

  ArgumentScore& operator+=(const ArgumentScore& other);
};

struct ScoringOptions {
  UnknownLabelPolicy unknown_labels = UnknownLabelPolicy::kTreatAsModifier;
  bool per_sentence = false;
};

enum class SenseCheck {
  kJoint,           // lemma and sense number
  kSenseNumberOnly  // sense number alone, lemma ignored
};

// Whether the system predicate's sense passes `check` against gold. Passes
// trivially when the gold corpus carries no senses at all. Throws
// SrlError(kMissingGoldSense) if gold does carry senses but not for this
// predicate; a system predicate without a sense fails.
bool PredicateSenseCorrect(const PredicateInstance& gold,
                           const PredicateInstance& system,
                           bool gold_has_senses, SenseCheck check);

// Predicate scorers. gold counts every gold predicate, predicted every
// system predicate; only anchor-paired predicates can be correct.
EvalCounts ScorePredicatesPrimeSrl(const AlignedCorpus& aligned);
EvalCounts ScorePredicatesLegacy09(const AlignedCorpus& aligned);
// Every paired predicate counts as correct (span scorers that do not look
// at senses).
EvalCounts ScorePredicatesLocation(const AlignedCorpus& aligned);

// Argument scorers for one anchor. Either side may be null (missed or
// spurious predicate); its arguments then count on one side only.
//
// PriMeSRL: a system argument is correct iff its predicate is paired, a gold
// argument with the same base label and reference flag has exactly the same
// token set (one-to-one), core arguments additionally need `sense_correct`,
// and an R-X argument additionally needs one of its X referents to be
// correct.
ArgumentScore ScorePredicatePrimeSrl(
    const PredicateInstance* gold, const PredicateInstance* system,
    bool sense_correct, Mode mode,
    UnknownLabelPolicy unknown_labels = UnknownLabelPolicy::kTreatAsModifier);
// Each labeled head is a unit; correct iff the same token carries the same
// literal label (prefixes included) in gold.
ArgumentScore ScorePredicateLegacyHead(const PredicateInstance* gold,
                                       const PredicateInstance* system);
// Parts are chained left to right: an unprefixed X opens a unit, C-X joins
// the most recent unit with base X or opens an orphan unit labeled "C-X".
// A unit is correct iff its exact part sequence (labels and extents) occurs
// in gold. V is excluded.
ArgumentScore ScorePredicateLegacySpan(const PredicateInstance* gold,
                                       const PredicateInstance* system);

ArgumentScore ScoreArgumentsPrimeSrl(const AlignedCorpus& aligned, Mode mode,
                                     const ScoringOptions& options = {});
ArgumentScore ScoreArgumentsLegacyHead(const AlignedCorpus& aligned);
ArgumentScore ScoreArgumentsLegacySpan(const AlignedCorpus& aligned);

struct ScoreReport {
  Metric metric = Metric::kPrimeSrl;
  Mode mode = Mode::kHead;
  EvalCounts predicate_counts;
  EvalCounts argument_counts;
  PerLabelCounts per_label;
  // Argument counts for each sentence, when requested.
  std::optional<std::vector<EvalCounts>> per_sentence;

  friend bool operator==(const ScoreReport&, const ScoreReport&) = default;
};

// Runs the predicate and argument scorers that belong to `metric`.
// legacy_head requires head mode; head mode requires a head corpus. A head
// corpus scored in span mode is treated as one-token spans. Throws
// SrlError(kModeMismatch) for the disallowed combinations.
ScoreReport Evaluate(const AlignedCorpus& aligned, Metric metric, Mode mode,
                     const ScoringOptions& options = {});
ScoreReport Evaluate(const Corpus& gold, const Corpus& system, Metric metric,
                     Mode mode, const ScoringOptions& options = {});

}  // namespace primesrl

#endif  // PRIMESRL_SCORING_H_
