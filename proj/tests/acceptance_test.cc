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

// Acceptance suite. Prints one PASS, FAIL or SKIP line per criterion and
// exits non-zero when any criterion fails. All tolerances are exact integer
// counts unless a line says otherwise; seeds are fixed.

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "primesrl/align.h"
#include "primesrl/conll05.h"
#include "primesrl/conll09.h"
#include "primesrl/errors.h"
#include "primesrl/report.h"
#include "primesrl/scoring.h"
#include "primesrl/senses.h"
#include "primesrl/stats.h"
#include "testing/fixtures.h"
#include "testing/generators.h"
#include "testing/oracle.h"

namespace primesrl {
namespace {

using testing::Chance;
using testing::GeneratorOptions;
using testing::Uniform;

enum class Status { kPass, kFail, kSkip };

struct Outcome {
  Status status = Status::kPass;
  std::vector<std::string> notes;

  void Fail(const std::string& why) {
    status = Status::kFail;
    if (notes.size() < 6) notes.push_back(why);
  }
  void Note(const std::string& what) { notes.push_back(what); }
};

std::string Counts(const EvalCounts& c) {
  return std::to_string(c.correct) + "/" + std::to_string(c.predicted) + "/" +
         std::to_string(c.gold);
}

// Expected cell: correct over predicted (precision) and over gold (recall).
struct Cell {
  std::int64_t correct;
  std::int64_t predicted;
  std::int64_t gold;
};

void Check(Outcome& o, const std::string& what, const EvalCounts& got,
           const Cell& want) {
  if (got.correct != want.correct || got.predicted != want.predicted ||
      got.gold != want.gold) {
    o.Fail(what + ": got c/p/g " + Counts(got) + ", want " +
           std::to_string(want.correct) + "/" + std::to_string(want.predicted) +
           "/" + std::to_string(want.gold));
  }
}

Corpus Load(const std::string& table, const std::string& name, Mode mode) {
  if (mode == Mode::kHead) {
    return testing::LoadConll09Fixture(table + "/" + name + ".conll09");
  }
  return testing::LoadConll05Fixture(table, name);
}

// Scores every system of `table` against its gold and checks the cells.
// A negative correct count in `want` marks an exempted cell.
void CheckTable(Outcome& o, const std::string& table,
                const std::vector<std::string>& systems, Mode mode,
                Metric metric, bool predicates, const std::vector<Cell>& want) {
  const Corpus gold = Load(table, "gold", mode);
  for (size_t i = 0; i < systems.size(); ++i) {
    if (want[i].correct < 0) continue;
    const Corpus system = Load(table, systems[i], mode);
    const ScoreReport r = Evaluate(gold, system, metric, mode);
    Check(o,
          table + " " + systems[i] + " " + std::string(MetricName(metric)) +
              " " + std::string(ModeName(mode)) +
              (predicates ? " predicates" : " arguments"),
          predicates ? r.predicate_counts : r.argument_counts, want[i]);
  }
}

const std::vector<std::string> kSenseSystems = {"gold", "p1", "p2", "p3"};
const std::vector<std::string> kContinuationSystems = {
    "gold", "p1", "p2", "p3", "p4", "p5", "p6", "p7"};
const std::vector<std::string> kReferenceSystems = {"gold", "p1", "p2", "p3",
                                                    "p4",   "p5", "p6"};

Outcome GoldenSense() {
  Outcome o;
  CheckTable(o, "sense", kSenseSystems, Mode::kHead, Metric::kPrimeSrl, true,
             {{1, 1, 1}, {0, 1, 1}, {0, 1, 1}, {0, 1, 1}});
  CheckTable(o, "sense", kSenseSystems, Mode::kHead, Metric::kPrimeSrl, false,
             {{3, 3, 3}, {1, 3, 3}, {1, 3, 3}, {1, 3, 3}});
  CheckTable(o, "sense", kSenseSystems, Mode::kHead, Metric::kLegacyHead, true,
             {{1, 1, 1}, {0, 1, 1}, {0, 1, 1}, {1, 1, 1}});
  CheckTable(o, "sense", kSenseSystems, Mode::kHead, Metric::kLegacyHead, false,
             {{3, 3, 3}, {3, 3, 3}, {3, 3, 3}, {3, 3, 3}});
  return o;
}

const std::vector<Cell> kContinuationPrime = {{3, 3, 3}, {2, 4, 3}, {2, 4, 3},
                                              {2, 3, 3}, {3, 3, 3}, {1, 3, 3},
                                              {3, 3, 3}, {2, 3, 3}};

Outcome GoldenContinuationHead() {
  Outcome o;
  CheckTable(o, "continuation", kContinuationSystems, Mode::kHead,
             Metric::kPrimeSrl, false, kContinuationPrime);
  // The exempted precision cell is checked anyway: 2 correct of 3 labels
  // predicted is what the counting rules give.
  CheckTable(o, "continuation", kContinuationSystems, Mode::kHead,
             Metric::kLegacyHead, false,
             {{4, 4, 4},
              {3, 4, 4},
              {3, 4, 4},
              {2, 4, 4},
              {2, 4, 4},
              {2, 4, 4},
              {3, 4, 4},
              {2, 3, 4}});
  return o;
}

Outcome GoldenContinuationSpan() {
  Outcome o;
  CheckTable(o, "continuation", kContinuationSystems, Mode::kSpan,
             Metric::kPrimeSrl, false, kContinuationPrime);
  CheckTable(o, "continuation", kContinuationSystems, Mode::kSpan,
             Metric::kLegacySpan, false,
             {{3, 3, 3},
              {2, 4, 3},
              {2, 4, 3},
              {2, 3, 3},
              {2, 4, 3},
              {1, 3, 3},
              {2, 3, 3},
              {2, 3, 3}});
  return o;
}

Outcome GoldenReference() {
  Outcome o;
  const std::vector<Cell> prime = {{3, 3, 3}, {1, 3, 3}, {2, 3, 3}, {1, 3, 3},
                                   {1, 3, 3}, {1, 3, 3}, {1, 3, 3}};
  const std::vector<Cell> legacy = {{3, 3, 3}, {2, 3, 3}, {2, 3, 3}, {1, 3, 3},
                                    {2, 3, 3}, {2, 3, 3}, {1, 3, 3}};
  std::vector<Cell> legacy_span = legacy;
  legacy_span[5] = {-1, 0, 0};  // exempted
  CheckTable(o, "reference", kReferenceSystems, Mode::kHead, Metric::kPrimeSrl,
             false, prime);
  CheckTable(o, "reference", kReferenceSystems, Mode::kHead,
             Metric::kLegacyHead, false, legacy);
  CheckTable(o, "reference", kReferenceSystems, Mode::kSpan, Metric::kPrimeSrl,
             false, prime);
  CheckTable(o, "reference", kReferenceSystems, Mode::kSpan,
             Metric::kLegacySpan, false, legacy_span);
  const ScoreReport p5 = Evaluate(Load("reference", "gold", Mode::kSpan),
                                  Load("reference", "p5", Mode::kSpan),
                                  Metric::kLegacySpan, Mode::kSpan);
  o.Note("exempt legacy span p5 cell is " + Counts(p5.argument_counts) +
         " (c/p/g)");
  return o;
}

Metric LegacyFor(Mode mode) {
  return mode == Mode::kHead ? Metric::kLegacyHead : Metric::kLegacySpan;
}

std::string DescribeSentence(const Sentence& s) {
  std::string out;
  for (const PredicateInstance& p : s.predicates) {
    out += "[" + std::to_string(p.anchor) + ":";
    for (const RawArgument& a : p.arguments) {
      if (!a.label.is_scorable()) continue;
      out += " " + a.label.ToString() + "@" + std::to_string(a.extent.first);
      if (a.extent.last != a.extent.first)
        out += "-" + std::to_string(a.extent.last);
    }
    out += "]";
  }
  return out;
}

Outcome Strictness() {
  Outcome o;
  std::mt19937 rng(5005);
  int violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    GeneratorOptions options;
    options.mode = trial % 2 == 0 ? Mode::kHead : Mode::kSpan;
    options.max_tokens = 8;
    options.max_predicates = 2;
    options.max_arguments = 4;
    const Corpus gold = testing::RandomCorpus(rng, options, 1);
    const Corpus system = testing::PerturbCorpus(rng, gold, options);
    const auto prime =
        Evaluate(gold, system, Metric::kPrimeSrl, options.mode).argument_counts;
    const auto legacy =
        Evaluate(gold, system, LegacyFor(options.mode), options.mode)
            .argument_counts;
    if (prime.correct > legacy.correct) {
      ++violations;
      o.Fail(std::string(ModeName(options.mode)) + " trial " +
             std::to_string(trial) + ": primesrl " +
             std::to_string(prime.correct) + " > legacy " +
             std::to_string(legacy.correct) + "; gold " +
             DescribeSentence(gold.sentences[0]) + " system " +
             DescribeSentence(system.sentences[0]));
    }
  }
  o.Note(std::to_string(violations) + " of 200 pairs violate the bound");
  return o;
}

Outcome SenseFlip() {
  Outcome o;
  std::mt19937 rng(6006);
  int trials = 0;
  int core_hits = 0;
  for (int attempt = 0; trials < 100 && attempt < 100000; ++attempt) {
    GeneratorOptions options;
    options.mode = attempt % 2 == 0 ? Mode::kHead : Mode::kSpan;
    const Corpus gold = testing::RandomCorpus(rng, options, 2);
    const Corpus system = testing::PerturbCorpus(rng, gold, options);

    // Pick a paired predicate whose sense is currently right.
    std::vector<std::pair<size_t, size_t>> candidates;
    for (size_t s = 0; s < system.sentences.size(); ++s) {
      const Sentence& ys = system.sentences[s];
      for (size_t k = 0; k < ys.predicates.size(); ++k) {
        const PredicateInstance* gp =
            gold.sentences[s].FindPredicate(ys.predicates[k].anchor);
        if (gp != nullptr &&
            testing::OracleSenseCorrect(*gp, ys.predicates[k], true)) {
          candidates.emplace_back(s, k);
        }
      }
    }
    if (candidates.empty()) continue;
    ++trials;
    const auto [s, k] =
        candidates[Uniform(rng, 0, static_cast<int>(candidates.size()) - 1)];

    Corpus flipped = system;
    PredicateInstance& pred = flipped.sentences[s].predicates[k];
    const SenseLabel old = *pred.sense;
    std::string id = old.sense_id();
    while (id == old.sense_id()) id = "0" + std::to_string(Uniform(rng, 1, 9));
    pred.sense = SenseLabel(old.lemma(), id);
    flipped.sentences[s].tokens[pred.anchor - 1].sense = pred.sense;

    const Mode mode = options.mode;
    const std::string where = "trial " + std::to_string(trials);
    const Metric legacy = LegacyFor(mode);
    const ScoreReport legacy_before = Evaluate(gold, system, legacy, mode);
    const ScoreReport legacy_after = Evaluate(gold, flipped, legacy, mode);
    if (legacy_before.argument_counts != legacy_after.argument_counts ||
        legacy_before.per_label != legacy_after.per_label) {
      o.Fail(where + ": " + std::string(MetricName(legacy)) +
             " argument counts moved");
    }

    const PredicateInstance* gp = gold.sentences[s].FindPredicate(pred.anchor);
    const ArgumentScore before = ScorePredicatePrimeSrl(
        gp, &system.sentences[s].predicates[k], true, mode);
    const ArgumentScore after = ScorePredicatePrimeSrl(
        gp, &pred, PredicateSenseCorrect(*gp, pred, true, SenseCheck::kJoint),
        mode);
    std::int64_t core_before = 0;
    for (const auto& [label, c] : before.per_label) {
      const EvalCounts& a = after.per_label.at(label);
      if (a.predicted != c.predicted || a.gold != c.gold) {
        o.Fail(where + ": denominators moved for " + label);
      }
      if (testing::OracleIsCore(label)) {
        core_before += c.correct;
        if (a.correct != 0)
          o.Fail(where + ": core " + label + " still correct");
      } else if (a.correct != c.correct) {
        o.Fail(where + ": modifier " + label + " changed");
      }
    }
    if (core_before > 0) ++core_hits;

    const auto total_before =
        Evaluate(gold, system, Metric::kPrimeSrl, mode).argument_counts;
    const auto total_after =
        Evaluate(gold, flipped, Metric::kPrimeSrl, mode).argument_counts;
    if (total_before.correct - total_after.correct != core_before) {
      o.Fail(where + ": corpus total changed by more than the core units");
    }
  }
  if (trials < 100) o.Fail("only " + std::to_string(trials) + " trials found");
  o.Note(std::to_string(trials) + " trials, " + std::to_string(core_hits) +
         " with correct core units before the flip");
  return o;
}

Outcome ContinuationPermutation() {
  Outcome o;
  std::mt19937 rng(7007);
  int trials = 0;
  for (int attempt = 0; trials < 100 && attempt < 100000; ++attempt) {
    GeneratorOptions options;
    options.mode = attempt % 2 == 0 ? Mode::kHead : Mode::kSpan;
    const Corpus gold = testing::RandomCorpus(rng, options, 2);
    const Corpus system = testing::PerturbCorpus(rng, gold, options);
    Corpus permuted = system;
    bool changed = false;
    for (Sentence& s : permuted.sentences) {
      for (PredicateInstance& p : s.predicates) {
        changed = testing::RedistributeContinuations(rng, p) || changed;
      }
    }
    if (!changed) continue;
    ++trials;
    ScoringOptions scoring;
    scoring.per_sentence = true;
    const ScoreReport a =
        Evaluate(gold, system, Metric::kPrimeSrl, options.mode, scoring);
    const ScoreReport b =
        Evaluate(gold, permuted, Metric::kPrimeSrl, options.mode, scoring);
    const PrecisionRecall fa = ComputeF1(a.argument_counts);
    const PrecisionRecall fb = ComputeF1(b.argument_counts);
    if (!(a == b) || fa.precision != fb.precision || fa.recall != fb.recall ||
        fa.f1 != fb.f1) {
      o.Fail("trial " + std::to_string(trials) + ": " +
             Counts(a.argument_counts) + " vs " + Counts(b.argument_counts) +
             " system " + DescribeSentence(system.sentences[0]) + " permuted " +
             DescribeSentence(permuted.sentences[0]));
    }
  }
  if (trials < 100) o.Fail("only " + std::to_string(trials) + " trials found");
  return o;
}

// Drops every argument of `pred` for which `drop` holds.
PredicateInstance Without(const PredicateInstance& pred,
                          const std::function<bool(const RoleLabel&)>& drop) {
  PredicateInstance out = pred;
  std::erase_if(out.arguments,
                [&](const RawArgument& a) { return drop(a.label); });
  return out;
}

std::int64_t Correct(const PredicateInstance& gold,
                     const PredicateInstance& system, Metric metric,
                     Mode mode) {
  switch (metric) {
    case Metric::kPrimeSrl:
      return ScorePredicatePrimeSrl(&gold, &system, true, mode).counts.correct;
    case Metric::kLegacyHead:
      return ScorePredicateLegacyHead(&gold, &system).counts.correct;
    case Metric::kLegacySpan:
      return ScorePredicateLegacySpan(&gold, &system).counts.correct;
  }
  return 0;
}

Outcome ReferenceDependency() {
  Outcome o;
  std::mt19937 rng(8008);
  const std::vector<std::string> bases = {"A0", "A1", "A2", "AM-LOC"};
  int trials = 0;
  for (int attempt = 0; trials < 50 && attempt < 10000; ++attempt) {
    GeneratorOptions options;
    options.mode = attempt % 2 == 0 ? Mode::kHead : Mode::kSpan;
    options.max_arguments = 2;
    Sentence sentence = testing::RandomSentence(rng, options);
    if (sentence.predicates.empty()) continue;
    PredicateInstance gold = sentence.predicates[0];
    const int n = static_cast<int>(sentence.tokens.size());
    const RoleLabel x = RoleLabel::Parse(bases[Uniform(rng, 0, 3)]);
    std::erase_if(gold.arguments, [&](const RawArgument& a) {
      return a.label.base() == x.base();
    });

    bool placed = testing::PlaceArgument(rng, gold, n, options.mode, x);
    if (placed && Chance(rng, 0.3)) {
      testing::PlaceArgument(rng, gold, n, options.mode,
                             x.WithContinuation(true));
    }
    const int refs = Uniform(rng, 1, 2);
    for (int r = 0; r < refs && placed; ++r) {
      placed = testing::PlaceArgument(rng, gold, n, options.mode,
                                      x.WithReference(true));
    }
    if (!placed) continue;
    ++trials;

    const PredicateInstance& system = gold;
    const auto is_ref = [&](const RoleLabel& l) {
      return l.is_reference() && l.base() == x.base();
    };
    const auto is_referent = [&](const RoleLabel& l) {
      return !l.is_reference() && l.base() == x.base();
    };
    const PredicateInstance deleted = Without(system, is_referent);
    const std::string where = "trial " + std::to_string(trials) + " " +
                              std::string(ModeName(options.mode));

    // Contribution of the R- units: score with them minus score without.
    auto ref_share = [&](const PredicateInstance& sys, Metric metric) {
      return Correct(gold, sys, metric, options.mode) -
             Correct(gold, Without(sys, is_ref), metric, options.mode);
    };
    if (ref_share(system, Metric::kPrimeSrl) != refs) {
      o.Fail(where + ": R- units not all correct before deletion");
    }
    if (ref_share(deleted, Metric::kPrimeSrl) != 0) {
      o.Fail(where + ": R- unit still credited without its referent");
    }
    for (Metric legacy : {Metric::kLegacyHead, Metric::kLegacySpan}) {
      if (options.mode == Mode::kSpan && legacy == Metric::kLegacyHead)
        continue;
      if (ref_share(system, legacy) != ref_share(deleted, legacy)) {
        o.Fail(where + ": " + std::string(MetricName(legacy)) +
               " credit for R- units changed");
      }
    }
  }
  if (trials < 50) o.Fail("only " + std::to_string(trials) + " trials found");
  return o;
}

Outcome OracleEquivalence() {
  Outcome o;
  std::mt19937 rng(9009);
  for (int trial = 0; trial < 500; ++trial) {
    GeneratorOptions options;
    options.mode = trial % 2 == 0 ? Mode::kHead : Mode::kSpan;
    options.max_arguments = 5;
    const Corpus gold = testing::RandomCorpus(rng, options, 1);
    const Corpus system = testing::PerturbCorpus(rng, gold, options);
    const EvalCounts prod =
        Evaluate(gold, system, Metric::kPrimeSrl, options.mode).argument_counts;
    const EvalCounts oracle =
        testing::OracleScoreCorpus(gold, system, options.mode);
    if (prod != oracle) {
      o.Fail("trial " + std::to_string(trial) + ": production " + Counts(prod) +
             ", oracle " + Counts(oracle) + "; gold " +
             DescribeSentence(gold.sentences[0]) + " system " +
             DescribeSentence(system.sentences[0]));
    }
  }
  return o;
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string Join(const std::vector<std::string>& lines) {
  std::string out;
  for (const std::string& l : lines) out += l + "\n";
  return out;
}

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; in >> cell;) out.push_back(cell);
  return out;
}

std::string JoinWith(const std::vector<std::string>& cells, const char* sep) {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) out += (i ? sep : "") + cells[i];
  return out;
}

// Puts comment lines and extra blank lines in front of the text so line
// numbers have to be tracked across them.
std::string WithPreamble(std::mt19937& rng, const std::string& text) {
  std::string out;
  for (int i = Uniform(rng, 0, 3); i > 0; --i) {
    out += Chance(rng, 0.5) ? "# generated\n" : "\n";
  }
  return out + text;
}

// Applies one corruption and returns (expected kind, expected line).
std::pair<ErrorKind, int> CorruptConll09(std::mt19937& rng,
                                         std::vector<std::string>& lines) {
  std::vector<int> rows;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (!lines[i].empty() && lines[i][0] != '#')
      rows.push_back(static_cast<int>(i));
  }
  const int row = rows[Uniform(rng, 0, static_cast<int>(rows.size()) - 1)];
  std::vector<std::string> cells = SplitTabs(lines[row]);
  int kind = Uniform(rng, 0, 3);
  if (kind == 3 && cells.size() <= 14) kind = 0;
  ErrorKind expected = ErrorKind::kColumnCountMismatch;
  switch (kind) {
    case 0:
      cells.pop_back();
      break;
    case 1:
      cells.push_back("_");
      expected = ErrorKind::kDanglingApredColumn;
      break;
    case 2:
      cells[0] = "x";
      expected = ErrorKind::kMalformedRow;
      break;
    default:
      cells[14] = "C-C-A0";
      expected = ErrorKind::kMalformedLabel;
      break;
  }
  lines[row] = JoinWith(cells, "\t");
  return {expected, row + 1};
}

std::pair<ErrorKind, int> CorruptConll05(std::mt19937& rng,
                                         std::vector<std::string>& lines,
                                         const Corpus& corpus, int offset) {
  // Props rows grouped by sentence, as (line index, sentence, token).
  struct RowRef {
    int line;
    size_t sentence;
    int token;
  };
  std::vector<RowRef> rows;
  int line = offset;
  for (size_t s = 0; s < corpus.sentences.size(); ++s) {
    for (size_t t = 0; t < corpus.sentences[s].tokens.size(); ++t) {
      rows.push_back({line++, s, static_cast<int>(t) + 1});
    }
    ++line;  // blank separator
  }
  for (int attempt = 0;; ++attempt) {
    const RowRef& r = rows[Uniform(rng, 0, static_cast<int>(rows.size()) - 1)];
    const Sentence& sentence = corpus.sentences[r.sentence];
    std::vector<std::string> cells = SplitTabs(lines[r.line]);
    const int kind = Uniform(rng, 0, 3);
    if (kind == 3) {
      // A row that loses its only cell reads as a sentence break instead.
      if (r.token == 1 || cells.size() < 2) continue;
      cells.pop_back();
      lines[r.line] = JoinWith(cells, "  ");
      return {ErrorKind::kColumnCountMismatch, r.line + 1};
    }
    if (sentence.predicates.empty()) continue;
    const int k =
        Uniform(rng, 0, static_cast<int>(sentence.predicates.size()) - 1);
    std::string& cell = cells[k + 1];
    bool covered = false;
    bool opens = false;
    for (const RawArgument& a : sentence.predicates[k].arguments) {
      covered = covered || a.extent.Contains(r.token);
      opens = opens || a.extent.first == r.token;
    }
    ErrorKind expected;
    if (kind == 0) {
      if (covered) continue;
      cell = "*)";
      expected = ErrorKind::kUnbalancedBracket;
    } else if (kind == 1) {
      if (!opens) continue;
      cell = "(C-C-" + cell.substr(1);
      expected = ErrorKind::kMalformedLabel;
    } else {
      cell = "?";
      expected = ErrorKind::kMalformedRow;
    }
    lines[r.line] = JoinWith(cells, "  ");
    return {expected, r.line + 1};
  }
}

Outcome RoundTrip() {
  Outcome o;
  std::mt19937 rng(1010);
  for (int trial = 0; trial < 50; ++trial) {
    GeneratorOptions head;
    const Corpus corpus = testing::RandomCorpus(rng, head, Uniform(rng, 1, 4));
    const Corpus first = ParseConll09(SerializeConll09(corpus));
    const Corpus second = ParseConll09(SerializeConll09(first));
    if (!(first == corpus) || !(second == first)) {
      o.Fail("conll09 round trip " + std::to_string(trial) + " differs");
    }

    GeneratorOptions span;
    span.mode = Mode::kSpan;
    const Corpus spans = testing::RandomCorpus(rng, span, Uniform(rng, 1, 4));
    Conll05Text text = SerializeConll05(spans);
    Corpus a = ParseConll05(text.words, text.props);
    std::istringstream senses(SerializeSenseSidecar(spans));
    ApplySenses(a, ParseSenseSidecar(senses));
    Conll05Text again = SerializeConll05(a);
    Corpus b = ParseConll05(again.words, again.props);
    std::istringstream senses_again(SerializeSenseSidecar(a));
    ApplySenses(b, ParseSenseSidecar(senses_again));
    if (!(a == spans) || !(b == a)) {
      o.Fail("conll05 round trip " + std::to_string(trial) + " differs");
    }
  }

  for (int trial = 0; trial < 20; ++trial) {
    GeneratorOptions options;
    const bool conll05 = trial % 2 == 1;
    options.mode = conll05 ? Mode::kSpan : Mode::kHead;
    options.senses = !conll05;
    const Corpus corpus =
        testing::RandomCorpus(rng, options, Uniform(rng, 2, 4));
    std::pair<ErrorKind, int> expected;
    std::string words;
    std::string corrupted;
    if (conll05) {
      const Conll05Text text = SerializeConll05(corpus);
      words = text.words;
      const std::string preamble = WithPreamble(rng, "");
      std::vector<std::string> lines = Lines(preamble + text.props);
      expected = CorruptConll05(rng, lines, corpus,
                                static_cast<int>(Lines(preamble).size()));
      corrupted = Join(lines);
    } else {
      std::vector<std::string> lines =
          Lines(WithPreamble(rng, SerializeConll09(corpus)));
      expected = CorruptConll09(rng, lines);
      corrupted = Join(lines);
    }
    ParseOptions po;
    po.source_name = "corrupt";
    try {
      if (conll05) {
        ParseConll05(words, corrupted, po);
      } else {
        ParseConll09(corrupted, po);
      }
      o.Fail("corrupted file " + std::to_string(trial) + " parsed cleanly");
    } catch (const SrlError& e) {
      if (e.kind() != expected.first || e.line() != expected.second) {
        o.Fail("corrupted file " + std::to_string(trial) + ": got " + e.what() +
               ", want " + std::string(ErrorKindName(expected.first)) +
               " at line " + std::to_string(expected.second));
      }
    }
  }
  return o;
}

Outcome DeskScale() {
  Outcome o;
  o.status = Status::kSkip;
  o.Note(
      "model-output comparisons need third-party predictions and licensed "
      "data; covered by criteria 1-9");
  const char* path = std::getenv("PRIMESRL_CONLL09_TEST");
  if (path == nullptr) {
    o.Note(
        "set PRIMESRL_CONLL09_TEST to a CoNLL-2009 English test file to "
        "check the C-X 0.88% and R-X 2.07% shares");
    return o;
  }
  const CorpusStats stats =
      ComputeCorpusStats(ParseConll09(testing::ReadFile(path)));
  const std::string c = FormatPercent(stats.pct_continuation);
  const std::string r = FormatPercent(stats.pct_reference);
  o.status = Status::kPass;
  if (c != "0.88%") o.Fail("C-X share " + c + ", want 0.88%");
  if (r != "2.07%") o.Fail("R-X share " + r + ", want 2.07%");
  o.Note("licensed test split: C-X " + c + ", R-X " + r);
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace primesrl

int main() {
  using primesrl::Outcome;
  using primesrl::Status;
  const std::vector<primesrl::Criterion> criteria = {
      {1, "golden sense table", primesrl::GoldenSense},
      {2, "golden continuation table, head", primesrl::GoldenContinuationHead},
      {3, "golden continuation table, span", primesrl::GoldenContinuationSpan},
      {4, "golden reference table", primesrl::GoldenReference},
      {5, "strictness over 200 random pairs", primesrl::Strictness},
      {6, "sense flip over 100 trials", primesrl::SenseFlip},
      {7, "C- permutation over 100 trials", primesrl::ContinuationPermutation},
      {8, "reference dependency over 50 trials", primesrl::ReferenceDependency},
      {9, "oracle agreement over 500 sentences", primesrl::OracleEquivalence},
      {10, "round trip and corrupted-file line numbers", primesrl::RoundTrip},
      {11, "model-scale tables", primesrl::DeskScale},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.Fail(std::string("exception: ") + e.what());
    }
    const char* tag = outcome.status == Status::kPass   ? "PASS"
                      : outcome.status == Status::kFail ? "FAIL"
                                                        : "SKIP";
    if (outcome.status == Status::kFail) ++failures;
    std::printf("%s criterion %d: %s\n", tag, c.id, c.title);
    for (const std::string& note : outcome.notes) {
      std::printf("    %s\n", note.c_str());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
