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

#include "primesrl/scoring.h"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "primesrl/errors.h"
#include "primesrl/normalize.h"

namespace primesrl {
namespace {

// Multiset of gold keys; Take() consumes one occurrence.
template <typename Key>
class GoldBag {
 public:
  void Add(const Key& key) { ++counts_[key]; }
  bool Take(const Key& key) {
    auto it = counts_.find(key);
    if (it == counts_.end() || it->second == 0) return false;
    --it->second;
    return true;
  }

 private:
  std::map<Key, int> counts_;
};

void CountGold(ArgumentScore& score, const std::string& base) {
  ++score.counts.gold;
  ++score.per_label[base].gold;
}

void CountPredicted(ArgumentScore& score, const std::string& base,
                    bool correct) {
  ++score.counts.predicted;
  EvalCounts& label = score.per_label[base];
  ++label.predicted;
  if (correct) {
    ++score.counts.correct;
    ++label.correct;
  }
}

std::vector<MergedArgument> UnitsOf(const PredicateInstance* pred,
                                    Mode mode) {
  if (pred == nullptr) return {};
  return MergeContinuations(*pred, mode);
}

std::vector<const RawArgument*> ScorableArgs(const PredicateInstance* pred) {
  std::vector<const RawArgument*> out;
  if (pred == nullptr) return out;
  for (const RawArgument& arg : pred->arguments) {
    if (arg.label.is_scorable()) out.push_back(&arg);
  }
  std::sort(out.begin(), out.end(),
            [](const RawArgument* a, const RawArgument* b) {
              return a->extent < b->extent;
            });
  return out;
}

// One chained unit of the legacy span scorer.
struct SpanChain {
  std::vector<std::pair<std::string, Extent>> parts;
  std::string base;

  bool operator<(const SpanChain& o) const { return parts < o.parts; }
};

std::vector<SpanChain> ChainParts(const PredicateInstance* pred) {
  std::vector<SpanChain> chains;
  // (base, reference flag) -> index of the most recent chain.
  std::map<RoleLabel, size_t> latest;
  for (const RawArgument* arg : ScorableArgs(pred)) {
    const RoleLabel key = arg->label.WithContinuation(false);
    auto it = latest.find(key);
    if (arg->label.is_continuation() && it != latest.end()) {
      chains[it->second].parts.emplace_back(arg->label.ToString(),
                                            arg->extent);
      continue;
    }
    chains.push_back({{{arg->label.ToString(), arg->extent}},
                      arg->label.base()});
    latest[key] = chains.size() - 1;
  }
  return chains;
}

EvalCounts ScorePredicates(const AlignedCorpus& aligned,
                           std::optional<SenseCheck> check) {
  EvalCounts counts;
  for (const AlignedSentence& sentence : aligned.sentences) {
    for (const PredicatePair& pair : sentence.pairs) {
      if (pair.gold != nullptr) {
        ++counts.gold;
        if (aligned.gold_has_senses && !pair.gold->sense && check) {
          throw SrlError(ErrorKind::kMissingGoldSense,
                         "gold predicate at token " +
                             std::to_string(pair.anchor) + " has no sense");
        }
      }
      if (pair.system != nullptr) ++counts.predicted;
      if (!pair.is_paired()) continue;
      if (!check || PredicateSenseCorrect(*pair.gold, *pair.system,
                                          aligned.gold_has_senses, *check)) {
        ++counts.correct;
      }
    }
  }
  return counts;
}

bool PairSenseCorrect(const AlignedCorpus& aligned, const PredicatePair& pair) {
  return pair.is_paired() &&
         PredicateSenseCorrect(*pair.gold, *pair.system,
                               aligned.gold_has_senses, SenseCheck::kJoint);
}

ArgumentScore ScoreSentenceArguments(const AlignedCorpus& aligned,
                                     const AlignedSentence& sentence,
                                     Metric metric, Mode mode,
                                     const ScoringOptions& options) {
  ArgumentScore score;
  for (const PredicatePair& pair : sentence.pairs) {
    switch (metric) {
      case Metric::kPrimeSrl:
        score += ScorePredicatePrimeSrl(pair.gold, pair.system,
                                        PairSenseCorrect(aligned, pair), mode,
                                        options.unknown_labels);
        break;
      case Metric::kLegacyHead:
        score += ScorePredicateLegacyHead(pair.gold, pair.system);
        break;
      case Metric::kLegacySpan:
        score += ScorePredicateLegacySpan(pair.gold, pair.system);
        break;
    }
  }
  return score;
}

}  // namespace

std::string_view MetricName(Metric metric) {
  switch (metric) {
    case Metric::kPrimeSrl: return "primesrl";
    case Metric::kLegacyHead: return "legacy_head";
    case Metric::kLegacySpan: return "legacy_span";
  }
  return "unknown";
}

std::optional<Metric> ParseMetric(std::string_view name) {
  if (name == "primesrl") return Metric::kPrimeSrl;
  if (name == "legacy_head") return Metric::kLegacyHead;
  if (name == "legacy_span") return Metric::kLegacySpan;
  return std::nullopt;
}

ArgumentScore& ArgumentScore::operator+=(const ArgumentScore& other) {
  counts += other.counts;
  for (const auto& [label, c] : other.per_label) per_label[label] += c;
  return *this;
}

bool PredicateSenseCorrect(const PredicateInstance& gold,
                           const PredicateInstance& system,
                           bool gold_has_senses, SenseCheck check) {
  if (!gold_has_senses) return true;
  if (!gold.sense) {
    throw SrlError(ErrorKind::kMissingGoldSense,
                   "gold predicate at token " + std::to_string(gold.anchor) +
                       " has no sense");
  }
  if (!system.sense) return false;
  return check == SenseCheck::kJoint
             ? gold.sense->JointlyEquals(*system.sense)
             : gold.sense->SameSenseNumber(*system.sense);
}

EvalCounts ScorePredicatesPrimeSrl(const AlignedCorpus& aligned) {
  return ScorePredicates(aligned, SenseCheck::kJoint);
}

EvalCounts ScorePredicatesLegacy09(const AlignedCorpus& aligned) {
  return ScorePredicates(aligned, SenseCheck::kSenseNumberOnly);
}

EvalCounts ScorePredicatesLocation(const AlignedCorpus& aligned) {
  return ScorePredicates(aligned, std::nullopt);
}

ArgumentScore ScorePredicatePrimeSrl(const PredicateInstance* gold,
                                     const PredicateInstance* system,
                                     bool sense_correct, Mode mode,
                                     UnknownLabelPolicy unknown_labels) {
  using Key = std::pair<RoleLabel, std::vector<int>>;
  ArgumentScore score;
  const std::vector<MergedArgument> gold_units = UnitsOf(gold, mode);
  const std::vector<ResolvedArgument> system_units =
      ResolveReferences(UnitsOf(system, mode));

  GoldBag<Key> bag;
  for (const MergedArgument& unit : gold_units) {
    CountGold(score, unit.base_label.base());
    // Spurious predicates have no gold side, so nothing can match.
    if (system != nullptr) bag.Add({unit.base_label, unit.tokens});
  }
  if (gold == nullptr) {
    for (const ResolvedArgument& r : system_units) {
      CountPredicted(score, r.unit.base_label.base(), false);
    }
    return score;
  }

  auto passes_sense = [&](const MergedArgument& unit) {
    return sense_correct ||
           Classify(unit.base_label, unknown_labels) != ArgumentClass::kCore;
  };

  // Plain arguments first: references depend on them, not the other way.
  std::vector<bool> correct(system_units.size(), false);
  for (size_t i = 0; i < system_units.size(); ++i) {
    const MergedArgument& unit = system_units[i].unit;
    if (unit.base_label.is_reference()) continue;
    correct[i] = passes_sense(unit) && bag.Take({unit.base_label, unit.tokens});
  }
  for (size_t i = 0; i < system_units.size(); ++i) {
    const ResolvedArgument& r = system_units[i];
    if (!r.is_reference()) continue;
    // Among several candidate referents, any correct one suffices.
    const bool referent_correct =
        std::any_of(r.referents.begin(), r.referents.end(),
                    [&](size_t j) { return correct[j]; });
    correct[i] = referent_correct && passes_sense(r.unit) &&
                 bag.Take({r.unit.base_label, r.unit.tokens});
  }
  for (size_t i = 0; i < system_units.size(); ++i) {
    CountPredicted(score, system_units[i].unit.base_label.base(), correct[i]);
  }
  return score;
}

ArgumentScore ScorePredicateLegacyHead(const PredicateInstance* gold,
                                       const PredicateInstance* system) {
  using Key = std::pair<std::string, int>;
  ArgumentScore score;
  GoldBag<Key> bag;
  for (const RawArgument* arg : ScorableArgs(gold)) {
    CountGold(score, arg->label.base());
    if (system != nullptr) bag.Add({arg->label.ToString(), arg->extent.first});
  }
  for (const RawArgument* arg : ScorableArgs(system)) {
    const bool correct =
        gold != nullptr && bag.Take({arg->label.ToString(), arg->extent.first});
    CountPredicted(score, arg->label.base(), correct);
  }
  return score;
}

ArgumentScore ScorePredicateLegacySpan(const PredicateInstance* gold,
                                       const PredicateInstance* system) {
  using Key = std::vector<std::pair<std::string, Extent>>;
  ArgumentScore score;
  GoldBag<Key> bag;
  for (const SpanChain& chain : ChainParts(gold)) {
    CountGold(score, chain.base);
    if (system != nullptr) bag.Add(chain.parts);
  }
  for (const SpanChain& chain : ChainParts(system)) {
    CountPredicted(score, chain.base, gold != nullptr && bag.Take(chain.parts));
  }
  return score;
}

ArgumentScore ScoreArgumentsPrimeSrl(const AlignedCorpus& aligned, Mode mode,
                                     const ScoringOptions& options) {
  ArgumentScore total;
  for (const AlignedSentence& sentence : aligned.sentences) {
    total += ScoreSentenceArguments(aligned, sentence, Metric::kPrimeSrl, mode,
                                    options);
  }
  return total;
}

ArgumentScore ScoreArgumentsLegacyHead(const AlignedCorpus& aligned) {
  ArgumentScore total;
  for (const AlignedSentence& sentence : aligned.sentences) {
    total += ScoreSentenceArguments(aligned, sentence, Metric::kLegacyHead,
                                    Mode::kHead, {});
  }
  return total;
}

ArgumentScore ScoreArgumentsLegacySpan(const AlignedCorpus& aligned) {
  ArgumentScore total;
  for (const AlignedSentence& sentence : aligned.sentences) {
    total += ScoreSentenceArguments(aligned, sentence, Metric::kLegacySpan,
                                    Mode::kSpan, {});
  }
  return total;
}

ScoreReport Evaluate(const AlignedCorpus& aligned, Metric metric, Mode mode,
                     const ScoringOptions& options) {
  if (mode == Mode::kHead && aligned.mode == Mode::kSpan) {
    throw SrlError(ErrorKind::kModeMismatch,
                   "span-based files cannot be scored in head mode");
  }
  if (metric == Metric::kLegacyHead && mode != Mode::kHead) {
    throw SrlError(ErrorKind::kModeMismatch,
                   "legacy_head scoring needs head mode");
  }
  if (metric == Metric::kLegacySpan && mode != Mode::kSpan) {
    throw SrlError(ErrorKind::kModeMismatch,
                   "legacy_span scoring needs span mode");
  }

  ScoreReport report;
  report.metric = metric;
  report.mode = mode;
  switch (metric) {
    case Metric::kPrimeSrl:
      report.predicate_counts = ScorePredicatesPrimeSrl(aligned);
      break;
    case Metric::kLegacyHead:
      report.predicate_counts = ScorePredicatesLegacy09(aligned);
      break;
    case Metric::kLegacySpan:
      report.predicate_counts = aligned.gold_has_senses
                                    ? ScorePredicatesLegacy09(aligned)
                                    : ScorePredicatesLocation(aligned);
      break;
  }

  ArgumentScore total;
  if (options.per_sentence) report.per_sentence.emplace();
  for (const AlignedSentence& sentence : aligned.sentences) {
    ArgumentScore s =
        ScoreSentenceArguments(aligned, sentence, metric, mode, options);
    if (report.per_sentence) report.per_sentence->push_back(s.counts);
    total += s;
  }
  report.argument_counts = total.counts;
  report.per_label = std::move(total.per_label);
  return report;
}

ScoreReport Evaluate(const Corpus& gold, const Corpus& system, Metric metric,
                     Mode mode, const ScoringOptions& options) {
  return Evaluate(Align(gold, system), metric, mode, options);
}

}  // namespace primesrl
