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

#include "primesrl/senses.h"

#include <charconv>
#include <set>
#include <sstream>
#include <string_view>
#include <utility>

#include "primesrl/errors.h"
#include "primesrl/ingest.h"

namespace primesrl {
namespace {

bool ParsePositive(std::string_view text, int& value) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size() && value > 0;
}

}  // namespace

std::vector<SenseEntry> ParseSenseSidecar(std::istream& in,
                                          const std::string& source_name) {
  std::vector<SenseEntry> entries;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (internal::IsBlank(line) || line.front() == '#') continue;
    const auto cells = internal::SplitColumns(line);
    int sentence = 0;
    int anchor = 0;
    if (cells.size() != 3 || !ParsePositive(cells[0], sentence) ||
        !ParsePositive(cells[1], anchor)) {
      throw SrlError(ErrorKind::kSidecar,
                     "expected 'sentence<TAB>token<TAB>lemma.sense'",
                     source_name, line_number);
    }
    auto sense = SenseLabel::Parse(cells[2]);
    if (!sense) {
      throw SrlError(ErrorKind::kSidecar,
                     "'" + std::string(cells[2]) + "' is not lemma.NN",
                     source_name, line_number);
    }
    entries.push_back({sentence, anchor, std::move(*sense), line_number});
  }
  return entries;
}

void ApplySenses(Corpus& corpus, const std::vector<SenseEntry>& entries,
                 const std::string& source_name) {
  std::set<std::pair<int, int>> seen;
  for (const SenseEntry& entry : entries) {
    auto fail = [&](const std::string& message) {
      throw SrlError(ErrorKind::kSidecar, message, source_name, entry.line);
    };
    if (entry.sentence > static_cast<int>(corpus.sentences.size())) {
      fail("sentence " + std::to_string(entry.sentence) + " does not exist");
    }
    Sentence& sentence = corpus.sentences[entry.sentence - 1];
    PredicateInstance* pred = nullptr;
    for (PredicateInstance& p : sentence.predicates) {
      if (p.anchor == entry.anchor) pred = &p;
    }
    if (pred == nullptr) {
      fail("no predicate at token " + std::to_string(entry.anchor) +
           " of sentence " + std::to_string(entry.sentence));
    }
    if (!seen.emplace(entry.sentence, entry.anchor).second) {
      fail("duplicate sense for sentence " + std::to_string(entry.sentence) +
           " token " + std::to_string(entry.anchor));
    }
    pred->sense = entry.sense;
    sentence.tokens[entry.anchor - 1].sense = entry.sense;
  }
  corpus.has_senses = true;
}

std::string SerializeSenseSidecar(const Corpus& corpus) {
  std::ostringstream out;
  for (size_t s = 0; s < corpus.sentences.size(); ++s) {
    for (const PredicateInstance& pred : corpus.sentences[s].predicates) {
      if (!pred.sense) continue;
      out << s + 1 << '\t' << pred.anchor << '\t' << pred.sense->ToString()
          << '\n';
    }
  }
  return out.str();
}

}  // namespace primesrl
