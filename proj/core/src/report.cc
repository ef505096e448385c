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

#include "primesrl/report.h"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "primesrl/errors.h"

namespace primesrl {
namespace {

using nlohmann::json;

constexpr std::string_view kBold = "\033[1m";
constexpr std::string_view kRed = "\033[31m";
constexpr std::string_view kGreen = "\033[32m";
constexpr std::string_view kReset = "\033[0m";

std::string Styled(const TextStyle& style, std::string_view code,
                   const std::string& text) {
  if (!style.color) return text;
  return std::string(code) + text + std::string(kReset);
}

std::string Fraction(std::int64_t num, std::int64_t den) {
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string Pad(std::string s, size_t width, bool right_align = false) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return right_align ? fill + s : s + fill;
}

void AppendSection(std::ostringstream& out, std::string_view name,
                   const EvalCounts& counts) {
  const PrecisionRecall prf = ComputeF1(counts);
  out << name << " Precision: " << FormatScore(prf.precision) << " ("
      << Fraction(counts.correct, counts.predicted) << ")\n";
  out << name << " Recall: " << FormatScore(prf.recall) << " ("
      << Fraction(counts.correct, counts.gold) << ")\n";
  out << name << " F1: " << FormatScore(prf.f1) << "\n";
}

json CountsToJson(const EvalCounts& counts) {
  const PrecisionRecall prf = ComputeF1(counts);
  return json{{"correct", counts.correct},     {"predicted", counts.predicted},
              {"gold", counts.gold},           {"precision", prf.precision},
              {"recall", prf.recall},          {"f1", prf.f1}};
}

EvalCounts CountsFromJson(const json& j) {
  EvalCounts counts;
  counts.correct = j.at("correct").get<std::int64_t>();
  counts.predicted = j.at("predicted").get<std::int64_t>();
  counts.gold = j.at("gold").get<std::int64_t>();
  if (!counts.IsValid()) {
    throw SrlError(ErrorKind::kConfig, "report counts violate correct <= "
                                       "predicted, gold");
  }
  return counts;
}

std::string DeltaText(double delta, const TextStyle& style) {
  const std::string text = FormatScore(delta);
  if (delta < -0.00005) return Styled(style, kRed, text);
  if (delta > 0.00005) return Styled(style, kGreen, text);
  return text;
}

}  // namespace

std::string FormatScore(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  std::string out(buf);
  if (out == "-0.0000") out = "0.0000";
  return out;
}

std::string FormatPercent(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f%%", value);
  return buf;
}

std::string FormatReport(const ScoreReport& report, bool per_label,
                         const TextStyle& style) {
  std::ostringstream out;
  out << Styled(style, kBold,
                "Metric: " + std::string(MetricName(report.metric)) +
                    "  Mode: " + std::string(ModeName(report.mode)))
      << "\n";
  AppendSection(out, "Predicate", report.predicate_counts);
  AppendSection(out, "Argument", report.argument_counts);
  if (per_label && !report.per_label.empty()) {
    out << "\n"
        << Styled(style, kBold,
                  Pad("Label", 12) + Pad("Correct", 9, true) +
                      Pad("Predicted", 11, true) + Pad("Gold", 7, true) +
                      Pad("P", 9, true) + Pad("R", 9, true) +
                      Pad("F1", 9, true))
        << "\n";
    for (const auto& [label, counts] : report.per_label) {
      const PrecisionRecall prf = ComputeF1(counts);
      out << Pad(label, 12) << Pad(std::to_string(counts.correct), 9, true)
          << Pad(std::to_string(counts.predicted), 11, true)
          << Pad(std::to_string(counts.gold), 7, true)
          << Pad(FormatScore(prf.precision), 9, true)
          << Pad(FormatScore(prf.recall), 9, true)
          << Pad(FormatScore(prf.f1), 9, true) << "\n";
    }
  }
  return out.str();
}

std::string FormatComparison(const ScoreReport& legacy,
                             const ScoreReport& primesrl,
                             const TextStyle& style) {
  std::ostringstream out;
  out << Styled(style, kBold,
                Pad("Metric", 14) + Pad("Pred F1", 10, true) +
                    Pad("Arg P", 10, true) + Pad("Arg R", 10, true) +
                    Pad("Arg F1", 10, true))
      << "\n";
  for (const ScoreReport* r : {&legacy, &primesrl}) {
    const PrecisionRecall pred = ComputeF1(r->predicate_counts);
    const PrecisionRecall arg = ComputeF1(r->argument_counts);
    out << Pad(std::string(MetricName(r->metric)), 14)
        << Pad(FormatScore(pred.f1), 10, true)
        << Pad(FormatScore(arg.precision), 10, true)
        << Pad(FormatScore(arg.recall), 10, true)
        << Pad(FormatScore(arg.f1), 10, true) << "\n";
  }
  const double pred_delta = ComputeF1(primesrl.predicate_counts).f1 -
                            ComputeF1(legacy.predicate_counts).f1;
  const double arg_delta = ComputeF1(primesrl.argument_counts).f1 -
                           ComputeF1(legacy.argument_counts).f1;
  out << "Predicate F1 delta: " << DeltaText(pred_delta, style) << "\n";
  out << "Argument F1 delta: " << DeltaText(arg_delta, style) << "\n";
  return out.str();
}

std::string FormatStats(const CorpusStats& stats, const TextStyle& style) {
  std::ostringstream out;
  out << "Sentences: " << stats.sentences << "\n";
  out << "Predicates: " << stats.predicates << "\n";
  out << "Arguments: " << stats.arguments << "\n";
  out << "C-X: " << FormatPercent(stats.pct_continuation) << "\n";
  out << "R-X: " << FormatPercent(stats.pct_reference) << "\n";
  out << Styled(style, kBold, "Per-label counts:") << "\n";
  for (const auto& [label, count] : stats.per_label) {
    out << "  " << Pad(label, 14) << count << "\n";
  }
  return out.str();
}

std::string ReportToJson(const ScoreReport& report, const ReportFlags& flags) {
  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["tool"] = "primesrl";
  doc["flags"] = flags;
  doc["metric"] = MetricName(report.metric);
  doc["mode"] = ModeName(report.mode);
  doc["predicates"] = CountsToJson(report.predicate_counts);
  doc["arguments"] = CountsToJson(report.argument_counts);
  json labels = json::array();
  for (const auto& [label, counts] : report.per_label) {
    json entry = CountsToJson(counts);
    entry["label"] = label;
    labels.push_back(std::move(entry));
  }
  doc["per_label"] = std::move(labels);
  if (report.per_sentence) {
    json sentences = json::array();
    for (const EvalCounts& counts : *report.per_sentence) {
      sentences.push_back(CountsToJson(counts));
    }
    doc["per_sentence"] = std::move(sentences);
  }
  return doc.dump(2) + "\n";
}

ReportDocument ReportFromJson(std::string_view text) {
  try {
    const json doc = json::parse(text);
    ReportDocument out;
    out.schema_version = doc.at("schema_version").get<int>();
    if (out.schema_version > kReportSchemaVersion) {
      throw SrlError(ErrorKind::kConfig,
                     "report schema_version " +
                         std::to_string(out.schema_version) +
                         " is newer than this tool");
    }
    out.flags = doc.at("flags").get<ReportFlags>();
    const auto metric = ParseMetric(doc.at("metric").get<std::string>());
    const auto mode = ParseMode(doc.at("mode").get<std::string>());
    if (!metric || !mode) {
      throw SrlError(ErrorKind::kConfig, "unknown metric or mode in report");
    }
    out.report.metric = *metric;
    out.report.mode = *mode;
    out.report.predicate_counts = CountsFromJson(doc.at("predicates"));
    out.report.argument_counts = CountsFromJson(doc.at("arguments"));
    for (const json& entry : doc.at("per_label")) {
      out.report.per_label[entry.at("label").get<std::string>()] =
          CountsFromJson(entry);
    }
    if (doc.contains("per_sentence")) {
      out.report.per_sentence.emplace();
      for (const json& entry : doc.at("per_sentence")) {
        out.report.per_sentence->push_back(CountsFromJson(entry));
      }
    }
    return out;
  } catch (const json::exception& e) {
    throw SrlError(ErrorKind::kConfig,
                   std::string("malformed report document: ") + e.what());
  }
}

}  // namespace primesrl
