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

#ifndef PRIMESRL_REPORT_H_
#define PRIMESRL_REPORT_H_

#include <map>
#include <string>
#include <string_view>

#include "primesrl/scoring.h"
#include "primesrl/stats.h"

namespace primesrl {

inline constexpr int kReportSchemaVersion = 1;

struct TextStyle {
  bool color = false;  // ANSI bold headers, red/green deltas
};

// Four decimals; never prints "-0.0000".
std::string FormatScore(double value);
// Two decimals plus '%'.
std::string FormatPercent(double value);

// Predicate and argument precision/recall/F1, one "Name Metric: value" line
// each, optionally followed by the per-label table.
std::string FormatReport(const ScoreReport& report, bool per_label,
                         const TextStyle& style = {});

// Side-by-side table of a legacy report and a PriMeSRL report on the same
// files, followed by the F1 deltas (PriMeSRL minus legacy).
std::string FormatComparison(const ScoreReport& legacy,
                             const ScoreReport& primesrl,
                             const TextStyle& style = {});

std::string FormatStats(const CorpusStats& stats, const TextStyle& style = {});

// Flags are echoed verbatim so a report can be reproduced.
using ReportFlags = std::map<std::string, std::string>;

struct ReportDocument {
  int schema_version = kReportSchemaVersion;
  ReportFlags flags;
  ScoreReport report;
};

std::string ReportToJson(const ScoreReport& report, const ReportFlags& flags);

// Inverse of ReportToJson. Throws SrlError(kConfig) for documents that are
// not reports or carry a newer schema_version.
ReportDocument ReportFromJson(std::string_view json);

}  // namespace primesrl

#endif  // PRIMESRL_REPORT_H_
