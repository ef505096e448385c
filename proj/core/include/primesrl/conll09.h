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

#ifndef PRIMESRL_CONLL09_H_
#define PRIMESRL_CONLL09_H_

#include <istream>
#include <string>

#include "primesrl/corpus.h"
#include "primesrl/ingest.h"

namespace primesrl {

// Reads the CoNLL-2009 columnar format:
//
//   ID FORM LEMMA PLEMMA POS PPOS FEAT PFEAT HEAD PHEAD DEPREL PDEPREL
//   FILLPRED PRED APRED_1 ... APRED_N
//
// where N is the number of FILLPRED="Y" rows in the sentence and the k-th
// APRED column belongs to the k-th such row. Sentences are separated by
// blank lines and lines starting with '#' are skipped. A predicate row whose
// PRED cell is "_" or unparsable keeps its location with no sense; the
// unparsable case adds a warning.
Corpus ParseConll09(std::istream& in, const ParseOptions& options = {},
                    Diagnostics* diagnostics = nullptr);
Corpus ParseConll09(const std::string& text, const ParseOptions& options = {},
                    Diagnostics* diagnostics = nullptr);

// Tab-separated output; columns 3-12 come from Token::columns or "_".
// Throws SrlError(kModeMismatch) for span corpora.
std::string SerializeConll09(const Corpus& corpus);

}  // namespace primesrl

#endif  // PRIMESRL_CONLL09_H_
