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

#include "primesrl/conll05.h"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string_view>
#include <utility>
#include <vector>

#include "primesrl/errors.h"

namespace primesrl {
namespace {

struct Row {
  int line = 0;
  std::string text;
};

using Block = std::vector<Row>;

// Splits a stream into blank-line separated blocks. Runs of blank lines
// collapse.
std::vector<Block> ReadBlocks(std::istream& in, bool words_file) {
  std::vector<Block> blocks;
  Block current;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (internal::IsBlank(line)) {
      if (!current.empty()) blocks.push_back(std::move(current));
      current.clear();
      continue;
    }
    // A lone "#" is a legitimate token in a words file.
    const bool comment =
        line.front() == '#' &&
        (!words_file || (line.size() > 1 && (line[1] == ' ' || line[1] == '\t')));
    if (comment) continue;
    current.push_back({line_number, line});
  }
  if (!current.empty()) blocks.push_back(std::move(current));
  return blocks;
}

struct Cell {
  std::vector<std::string_view> opens;
  int closes = 0;
};

class PropsReader {
 public:
  PropsReader(const ParseOptions& options, Diagnostics* diagnostics)
      : options_(options), diagnostics_(diagnostics) {}

  Sentence Read(const Block& block, const std::vector<std::string>* forms) {
    std::vector<std::vector<std::string_view>> rows;
    rows.reserve(block.size());
    for (const Row& row : block) rows.push_back(internal::SplitColumns(row.text));

    const size_t width = rows.front().size();
    int targets = 0;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != width) {
        Fail(ErrorKind::kColumnCountMismatch, block[r].line,
             "expected " + std::to_string(width) + " columns, found " +
                 std::to_string(rows[r].size()));
      }
      if (rows[r][0] != "-") ++targets;
    }
    const int columns = static_cast<int>(width) - 1;
    if (columns != targets) {
      Fail(columns > targets ? ErrorKind::kDanglingApredColumn
                             : ErrorKind::kColumnCountMismatch,
           block.front().line,
           std::to_string(columns) + " argument columns for " +
               std::to_string(targets) + " target verbs");
    }
    if (forms != nullptr && forms->size() != rows.size()) {
      Fail(ErrorKind::kMalformedRow, block.front().line,
           "words file has " + std::to_string(forms->size()) +
               " tokens for this sentence, props has " +
               std::to_string(rows.size()));
    }

    Sentence sentence;
    for (size_t r = 0; r < rows.size(); ++r) {
      Token token;
      token.index = static_cast<int>(r) + 1;
      if (forms != nullptr) token.form = (*forms)[r];
      token.is_predicate = rows[r][0] != "-";
      token.columns.emplace_back(rows[r][0]);
      sentence.tokens.push_back(std::move(token));
    }

    int previous_anchor = 0;
    for (int k = 0; k < columns; ++k) {
      PredicateInstance pred = ReadColumn(block, rows, k + 1);
      if (pred.anchor <= previous_anchor) {
        Fail(ErrorKind::kAnchorMissing, block.front().line,
             "column " + std::to_string(k + 1) +
                 " is anchored at or before the previous column's verb");
      }
      previous_anchor = pred.anchor;
      sentence.predicates.push_back(std::move(pred));
    }
    return sentence;
  }

 private:
  PredicateInstance ReadColumn(
      const Block& block, const std::vector<std::vector<std::string_view>>& rows,
      int column) {
    PredicateInstance pred;
    struct Open {
      RoleLabel label;
      int start;
      int line;
    };
    std::optional<Open> open;
    for (size_t r = 0; r < rows.size(); ++r) {
      const int line = block[r].line;
      const int index = static_cast<int>(r) + 1;
      const Cell cell = ParseCell(rows[r][column], line);
      if (cell.opens.size() > 1 || (!cell.opens.empty() && open)) {
        Fail(ErrorKind::kOverlappingSpan, line,
             "argument opened inside another in column " +
                 std::to_string(column));
      }
      if (!cell.opens.empty()) {
        open = Open{internal::ParseLabelCell(cell.opens.front(), options_, line,
                                             diagnostics_),
                    index, line};
      }
      if (cell.closes > 1 || (cell.closes == 1 && !open)) {
        Fail(ErrorKind::kUnbalancedBracket, line,
             "')' without a matching '(' in column " + std::to_string(column));
      }
      if (cell.closes == 1) {
        pred.arguments.push_back({open->label, Extent{open->start, index}});
        open.reset();
      }
    }
    if (open) {
      Fail(ErrorKind::kUnbalancedBracket, open->line,
           "'(" + open->label.ToString() + "*' is never closed in column " +
               std::to_string(column));
    }

    // Prefer the target row that opens the V part, then any target row the
    // V part covers.
    std::optional<int> anchor;
    for (const RawArgument& arg : pred.arguments) {
      if (arg.label.family() != RoleFamily::kVerb || arg.label.is_continuation())
        continue;
      if (rows[arg.extent.first - 1][0] != "-") {
        anchor = arg.extent.first;
        break;
      }
      for (int i = arg.extent.first; i <= arg.extent.last && !anchor; ++i) {
        if (rows[i - 1][0] != "-") anchor = i;
      }
      if (anchor) break;
    }
    if (!anchor) {
      Fail(ErrorKind::kAnchorMissing, block.front().line,
           "column " + std::to_string(column) +
               " has no V span on a target verb row");
    }
    pred.anchor = *anchor;
    return pred;
  }

  Cell ParseCell(std::string_view text, int line) const {
    Cell cell;
    size_t pos = 0;
    while (pos < text.size() && text[pos] == '(') {
      const size_t end = text.find_first_of("(*", pos + 1);
      if (end == std::string_view::npos) break;
      cell.opens.push_back(text.substr(pos + 1, end - pos - 1));
      pos = end;
    }
    if (pos >= text.size() || text[pos] != '*') {
      Fail(ErrorKind::kMalformedRow, line,
           "cannot read bracket cell '" + std::string(text) + "'");
    }
    ++pos;
    // CoNLL-2004 files repeat the label before the closing bracket.
    while (pos < text.size() && text[pos] != ')') ++pos;
    while (pos < text.size() && text[pos] == ')') {
      ++cell.closes;
      ++pos;
    }
    if (pos != text.size()) {
      Fail(ErrorKind::kMalformedRow, line,
           "cannot read bracket cell '" + std::string(text) + "'");
    }
    return cell;
  }

  [[noreturn]] void Fail(ErrorKind kind, int line,
                         const std::string& message) const {
    throw SrlError(kind, message, options_.source_name, line);
  }

  const ParseOptions& options_;
  Diagnostics* diagnostics_;
};

Corpus ParseImpl(std::istream* words, std::istream& props,
                 const ParseOptions& options, Diagnostics* diagnostics) {
  Corpus corpus;
  corpus.mode = Mode::kSpan;
  corpus.has_senses = false;

  std::vector<Block> word_blocks;
  if (words != nullptr) word_blocks = ReadBlocks(*words, true);
  const std::vector<Block> prop_blocks = ReadBlocks(props, false);
  if (words != nullptr && word_blocks.size() != prop_blocks.size()) {
    throw SrlError(ErrorKind::kMalformedRow,
                   "words file has " + std::to_string(word_blocks.size()) +
                       " sentences, props file has " +
                       std::to_string(prop_blocks.size()),
                   options.source_name);
  }

  PropsReader reader(options, diagnostics);
  for (size_t s = 0; s < prop_blocks.size(); ++s) {
    std::optional<std::vector<std::string>> forms;
    if (words != nullptr) {
      forms.emplace();
      for (const Row& row : word_blocks[s]) {
        forms->emplace_back(internal::SplitColumns(row.text).front());
      }
    }
    corpus.sentences.push_back(
        reader.Read(prop_blocks[s], forms ? &*forms : nullptr));
  }
  return corpus;
}

std::string PadTo(const std::string& s, size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

}  // namespace

Corpus ParseConll05(std::istream& words, std::istream& props,
                    const ParseOptions& options, Diagnostics* diagnostics) {
  return ParseImpl(&words, props, options, diagnostics);
}

Corpus ParseConll05Props(std::istream& props, const ParseOptions& options,
                         Diagnostics* diagnostics) {
  return ParseImpl(nullptr, props, options, diagnostics);
}

Corpus ParseConll05(const std::string& words, const std::string& props,
                    const ParseOptions& options, Diagnostics* diagnostics) {
  std::istringstream words_in(words);
  std::istringstream props_in(props);
  return ParseConll05(words_in, props_in, options, diagnostics);
}

Conll05Text SerializeConll05(const Corpus& corpus) {
  if (corpus.mode != Mode::kSpan) {
    throw SrlError(ErrorKind::kModeMismatch,
                   "CoNLL-2005 output needs a span-mode corpus");
  }
  std::ostringstream words;
  std::ostringstream props;
  for (const Sentence& sentence : corpus.sentences) {
    const size_t n = sentence.tokens.size();
    const size_t k_count = sentence.predicates.size();
    // table[row][0] is the target column, table[row][k + 1] the k-th
    // predicate's bracket cell.
    std::vector<std::vector<std::string>> table(
        n, std::vector<std::string>(k_count + 1));
    for (size_t i = 0; i < n; ++i) {
      const Token& token = sentence.tokens[i];
      words << (token.form.empty() ? "_" : token.form) << '\n';
      if (!token.columns.empty()) {
        table[i][0] = token.columns.front();
      } else if (token.is_predicate) {
        table[i][0] = token.sense ? token.sense->lemma()
                                  : (token.form.empty() ? "V" : token.form);
      } else {
        table[i][0] = "-";
      }
    }
    for (size_t k = 0; k < k_count; ++k) {
      std::vector<std::string> opens(n);
      std::vector<bool> closes(n, false);
      for (const RawArgument& arg : sentence.predicates[k].arguments) {
        opens.at(arg.extent.first - 1) = "(" + arg.label.ToString();
        closes.at(arg.extent.last - 1) = true;
      }
      for (size_t i = 0; i < n; ++i) {
        table[i][k + 1] = opens[i] + "*" + (closes[i] ? ")" : "");
      }
    }
    std::vector<size_t> widths(k_count + 1, 0);
    for (const auto& row : table) {
      for (size_t c = 0; c < row.size(); ++c) {
        widths[c] = std::max(widths[c], row[c].size());
      }
    }
    for (const auto& row : table) {
      std::string line;
      for (size_t c = 0; c < row.size(); ++c) {
        line += c + 1 == row.size() ? row[c] : PadTo(row[c], widths[c] + 2);
      }
      props << line << '\n';
    }
    words << '\n';
    props << '\n';
  }
  return {words.str(), props.str()};
}

}  // namespace primesrl
