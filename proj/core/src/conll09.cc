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

#include "primesrl/conll09.h"

#include <charconv>
#include <sstream>
#include <string_view>
#include <vector>

#include "primesrl/errors.h"

namespace primesrl {
namespace {

constexpr int kFixedColumns = 14;
constexpr int kFillPredColumn = 12;  // 0-based
constexpr int kPredColumn = 13;
constexpr int kFirstPassthrough = 2;
constexpr int kPassthroughCount = 10;

struct Row {
  int line = 0;
  std::string text;
  std::vector<std::string_view> cells;
};

class SentenceBuilder {
 public:
  SentenceBuilder(const ParseOptions& options, Diagnostics* diagnostics)
      : options_(options), diagnostics_(diagnostics) {}

  Sentence Build(std::vector<Row>& rows) const {
    for (Row& row : rows) row.cells = internal::SplitColumns(row.text);

    int predicate_count = 0;
    for (const Row& row : rows) {
      if (static_cast<int>(row.cells.size()) < kFixedColumns) {
        Fail(ErrorKind::kColumnCountMismatch, row.line,
             "expected at least 14 columns, found " +
                 std::to_string(row.cells.size()));
      }
      if (row.cells[kFillPredColumn] == "Y") ++predicate_count;
    }
    const size_t expected = kFixedColumns + predicate_count;

    Sentence sentence;
    for (size_t i = 0; i < rows.size(); ++i) {
      const Row& row = rows[i];
      if (row.cells.size() < expected) {
        Fail(ErrorKind::kColumnCountMismatch, row.line,
             "expected " + std::to_string(expected) + " columns for " +
                 std::to_string(predicate_count) + " predicates, found " +
                 std::to_string(row.cells.size()));
      }
      if (row.cells.size() > expected) {
        Fail(ErrorKind::kDanglingApredColumn, row.line,
             std::to_string(row.cells.size() - kFixedColumns) +
                 " argument columns but only " +
                 std::to_string(predicate_count) + " FILLPRED rows");
      }
      int id = 0;
      auto [ptr, ec] = std::from_chars(
          row.cells[0].data(), row.cells[0].data() + row.cells[0].size(), id);
      if (ec != std::errc() ||
          ptr != row.cells[0].data() + row.cells[0].size() ||
          id != static_cast<int>(i) + 1) {
        Fail(ErrorKind::kMalformedRow, row.line,
             "token ID '" + std::string(row.cells[0]) + "', expected " +
                 std::to_string(i + 1));
      }

      Token token;
      token.index = id;
      token.form = std::string(row.cells[1]);
      token.columns.reserve(kPassthroughCount);
      for (int c = kFirstPassthrough; c < kFirstPassthrough + kPassthroughCount;
           ++c) {
        token.columns.emplace_back(row.cells[c]);
      }
      token.is_predicate = row.cells[kFillPredColumn] == "Y";
      if (token.is_predicate) {
        std::string_view pred = row.cells[kPredColumn];
        if (pred != "_") {
          token.sense = SenseLabel::Parse(pred);
          if (!token.sense && diagnostics_ != nullptr) {
            diagnostics_->Warn(options_.source_name, row.line,
                               "MalformedSense: '" + std::string(pred) +
                                   "' is not lemma.NN; sense left empty");
          }
        }
        PredicateInstance instance;
        instance.anchor = id;
        instance.sense = token.sense;
        sentence.predicates.push_back(std::move(instance));
      }
      sentence.tokens.push_back(std::move(token));
    }

    for (size_t i = 0; i < rows.size(); ++i) {
      const Row& row = rows[i];
      const int index = static_cast<int>(i) + 1;
      for (int k = 0; k < predicate_count; ++k) {
        std::string_view cell = row.cells[kFixedColumns + k];
        if (cell == "_") continue;
        sentence.predicates[k].arguments.push_back(
            {internal::ParseLabelCell(cell, options_, row.line, diagnostics_),
             Extent::Single(index)});
      }
    }
    return sentence;
  }

 private:
  [[noreturn]] void Fail(ErrorKind kind, int line,
                         const std::string& message) const {
    throw SrlError(kind, message, options_.source_name, line);
  }

  const ParseOptions& options_;
  Diagnostics* diagnostics_;
};

}  // namespace

Corpus ParseConll09(std::istream& in, const ParseOptions& options,
                    Diagnostics* diagnostics) {
  Corpus corpus;
  corpus.mode = Mode::kHead;
  corpus.has_senses = true;
  SentenceBuilder builder(options, diagnostics);

  std::vector<Row> rows;
  std::string line;
  int line_number = 0;
  auto flush = [&] {
    if (rows.empty()) return;
    corpus.sentences.push_back(builder.Build(rows));
    rows.clear();
  };
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (internal::IsBlank(line)) {
      flush();
      continue;
    }
    if (line.front() == '#') continue;
    rows.push_back({line_number, line, {}});
  }
  flush();
  return corpus;
}

Corpus ParseConll09(const std::string& text, const ParseOptions& options,
                    Diagnostics* diagnostics) {
  std::istringstream in(text);
  return ParseConll09(in, options, diagnostics);
}

std::string SerializeConll09(const Corpus& corpus) {
  if (corpus.mode != Mode::kHead) {
    throw SrlError(ErrorKind::kModeMismatch,
                   "CoNLL-2009 output needs a head-mode corpus");
  }
  std::ostringstream out;
  for (const Sentence& sentence : corpus.sentences) {
    const size_t n = sentence.tokens.size();
    // cells[token][predicate]
    std::vector<std::vector<std::string>> cells(
        n, std::vector<std::string>(sentence.predicates.size(), "_"));
    for (size_t k = 0; k < sentence.predicates.size(); ++k) {
      for (const RawArgument& arg : sentence.predicates[k].arguments) {
        std::string& cell = cells.at(arg.extent.first - 1)[k];
        if (cell != "_") {
          throw SrlError(ErrorKind::kOverlappingSpan,
                         "two labels on token " +
                             std::to_string(arg.extent.first) +
                             " for one predicate");
        }
        cell = arg.label.ToString();
      }
    }
    for (size_t i = 0; i < n; ++i) {
      const Token& token = sentence.tokens[i];
      out << token.index << '\t' << token.form;
      for (int c = 0; c < kPassthroughCount; ++c) {
        out << '\t'
            << (c < static_cast<int>(token.columns.size()) ? token.columns[c]
                                                           : "_");
      }
      out << '\t' << (token.is_predicate ? "Y" : "_");
      out << '\t'
          << (token.is_predicate && token.sense ? token.sense->ToString()
                                                : "_");
      for (const std::string& cell : cells[i]) out << '\t' << cell;
      out << '\n';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace primesrl
