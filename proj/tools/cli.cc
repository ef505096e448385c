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

#include "cli.h"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "primesrl/align.h"
#include "primesrl/conll05.h"
#include "primesrl/conll09.h"
#include "primesrl/corpus.h"
#include "primesrl/errors.h"
#include "primesrl/report.h"
#include "primesrl/scoring.h"
#include "primesrl/senses.h"
#include "primesrl/stats.h"

namespace primesrl::cli {
namespace {

struct InputOptions {
  std::string format = "conll09";
  std::string mode;  // empty: head for conll09, span for conll05
  std::string words;
  std::string senses;
  std::string system_senses;
  bool strict_labels = false;
};

struct EvalOptions {
  std::string gold;
  std::string system;
  std::string metric = "primesrl";
  bool per_label = false;
  bool per_sentence = false;
  std::string json;
};

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw SrlError(ErrorKind::kConfig, "cannot open '" + path + "'");
  }
  return in;
}

Mode ResolveMode(const InputOptions& in) {
  if (in.mode.empty()) return in.format == "conll05" ? Mode::kSpan : Mode::kHead;
  const Mode mode = *ParseMode(in.mode);
  if (in.format == "conll05" && mode == Mode::kHead) {
    throw SrlError(ErrorKind::kModeMismatch,
                   "conll05 files are span-based; use --mode span");
  }
  return mode;
}

void ApplySidecar(Corpus& corpus, const std::string& path) {
  if (path.empty()) return;
  std::ifstream in = OpenOrThrow(path);
  ApplySenses(corpus, ParseSenseSidecar(in, path), path);
}

Corpus Load(const std::string& path, const std::string& senses,
            const InputOptions& in, std::ostream& err) {
  ParseOptions options;
  options.source_name = path;
  options.unknown_labels = in.strict_labels
                               ? UnknownLabelPolicy::kReject
                               : UnknownLabelPolicy::kTreatAsModifier;
  Diagnostics diagnostics;
  std::ifstream file = OpenOrThrow(path);
  Corpus corpus;
  if (in.format == "conll09") {
    corpus = ParseConll09(file, options, &diagnostics);
  } else if (!in.words.empty()) {
    std::ifstream words = OpenOrThrow(in.words);
    corpus = ParseConll05(words, file, options, &diagnostics);
  } else {
    corpus = ParseConll05Props(file, options, &diagnostics);
  }
  ApplySidecar(corpus, senses);
  for (const std::string& warning : diagnostics.warnings) {
    err << "warning: " << warning << "\n";
  }
  return corpus;
}

ReportFlags FlagsOf(const std::string& command, const InputOptions& in,
                    const EvalOptions& ev, Mode mode) {
  return {{"command", command},
          {"gold", ev.gold},
          {"system", ev.system},
          {"format", in.format},
          {"metric", ev.metric},
          {"mode", std::string(ModeName(mode))},
          {"words", in.words},
          {"senses", in.senses},
          {"system_senses", in.system_senses},
          {"per_label", ev.per_label ? "true" : "false"},
          {"per_sentence", ev.per_sentence ? "true" : "false"},
          {"strict_labels", in.strict_labels ? "true" : "false"}};
}

Metric LegacyMetricFor(Mode mode) {
  return mode == Mode::kHead ? Metric::kLegacyHead : Metric::kLegacySpan;
}

void WriteJson(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw SrlError(ErrorKind::kConfig, "cannot write '" + path + "'");
  out << text;
}

void AddInputOptions(CLI::App* cmd, InputOptions& in, bool with_senses) {
  cmd->add_option("--format", in.format, "Input format")
      ->check(CLI::IsMember({"conll09", "conll05"}));
  cmd->add_option("--words", in.words,
                  "CoNLL-2005 words file (one token per line)");
  cmd->add_flag("--strict-labels", in.strict_labels,
                "Reject role labels outside the core/modifier families");
  if (with_senses) {
    cmd->add_option("--mode", in.mode, "head or span")
        ->check(CLI::IsMember({"head", "span"}));
    cmd->add_option("--senses", in.senses,
                    "Sense sidecar for the gold file (sent, token, lemma.NN)");
    cmd->add_option("--system-senses", in.system_senses,
                    "Sense sidecar for the system file");
  } else {
    cmd->add_option("--senses", in.senses, "Sense sidecar");
  }
}

int ExitCodeFor(const SrlError& e) {
  switch (e.error_class()) {
    case ErrorClass::kParse: return kExitParseError;
    case ErrorClass::kAlign: return kExitAlignError;
    case ErrorClass::kConfig: return kExitConfigError;
  }
  return kExitConfigError;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err, bool allow_color) {
  CLI::App app{"Semantic role labeling scorer: PriMeSRL and legacy CoNLL "
               "metrics"};
  app.name("primesrl");
  app.require_subcommand(1);

  InputOptions in;
  EvalOptions ev;

  CLI::App* evaluate = app.add_subcommand("evaluate", "Score a system file");
  evaluate->add_option("gold", ev.gold, "Gold file")->required();
  evaluate->add_option("system", ev.system, "System file")->required();
  evaluate->add_option("--metric", ev.metric, "primesrl or legacy")
      ->check(CLI::IsMember({"primesrl", "legacy"}));
  evaluate->add_flag("--per-label", ev.per_label, "Print per-label table");
  evaluate->add_flag("--per-sentence", ev.per_sentence,
                     "Include per-sentence counts in the JSON report");
  evaluate->add_option("--json", ev.json, "Write a JSON report here");
  AddInputOptions(evaluate, in, true);

  CLI::App* compare = app.add_subcommand(
      "compare", "Score with PriMeSRL and the matching legacy metric");
  compare->add_option("gold", ev.gold, "Gold file")->required();
  compare->add_option("system", ev.system, "System file")->required();
  compare->add_option("--json", ev.json,
                      "Write the PriMeSRL JSON report here");
  AddInputOptions(compare, in, true);

  std::string stats_path;
  CLI::App* stats = app.add_subcommand(
      "stats", "Count predicates and C-/R- argument shares");
  stats->add_option("path", stats_path, "Corpus file")->required();
  AddInputOptions(stats, in, false);

  std::vector<const char*> argv{"primesrl"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }

  TextStyle style;
  style.color = allow_color && std::getenv("PRIME_SRL_NO_COLOR") == nullptr;

  try {
    if (stats->parsed()) {
      const Corpus corpus = Load(stats_path, in.senses, in, err);
      out << FormatStats(ComputeCorpusStats(corpus), style);
      return kExitOk;
    }

    const Mode mode = ResolveMode(in);
    const Corpus gold = Load(ev.gold, in.senses, in, err);
    const Corpus system = Load(ev.system, in.system_senses, in, err);
    const AlignedCorpus aligned = Align(gold, system);
    ScoringOptions scoring;
    scoring.unknown_labels = in.strict_labels
                                 ? UnknownLabelPolicy::kReject
                                 : UnknownLabelPolicy::kTreatAsModifier;
    scoring.per_sentence = ev.per_sentence;

    if (evaluate->parsed()) {
      const Metric metric =
          ev.metric == "legacy" ? LegacyMetricFor(mode) : Metric::kPrimeSrl;
      const ScoreReport report = Evaluate(aligned, metric, mode, scoring);
      out << FormatReport(report, ev.per_label, style);
      if (!ev.json.empty()) {
        WriteJson(ev.json,
                  ReportToJson(report, FlagsOf("evaluate", in, ev, mode)));
      }
      return kExitOk;
    }

    const ScoreReport legacy =
        Evaluate(aligned, LegacyMetricFor(mode), mode, scoring);
    const ScoreReport prime =
        Evaluate(aligned, Metric::kPrimeSrl, mode, scoring);
    out << FormatComparison(legacy, prime, style);
    if (!ev.json.empty()) {
      ev.metric = "primesrl";
      WriteJson(ev.json, ReportToJson(prime, FlagsOf("compare", in, ev, mode)));
    }
    return kExitOk;
  } catch (const SrlError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e);
  }
}

}  // namespace primesrl::cli
