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

#ifndef PRIMESRL_CONLL05_H_
#define PRIMESRL_CONLL05_H_

#include <istream>
#include <string>

#include "primesrl/corpus.h"
#include "primesrl/ingest.h"

namespace primesrl {

// Reads the CoNLL-2005 words + props pair. Each props row holds the target
// verb (or "-") followed by one bracket column per target verb:
//
//   -        (A0*)   *
//   sell     (V*)    *
//   -        (A1*    (A0*
//   -        *)      *)
//
// "(X*" opens a part, "*)" closes it and "(X*)" is a one-token part. Every
// column must contain a V span; the predicate is anchored at the target row
// that opens it. V parts are kept as arguments but are never scored. The
// corpus carries no senses (has_senses = false) until a sidecar is applied.
Corpus ParseConll05(std::istream& words, std::istream& props,
                    const ParseOptions& options = {},
                    Diagnostics* diagnostics = nullptr);

// Props-only variant: token forms are left empty, so alignment checks
// token counts but not forms.
Corpus ParseConll05Props(std::istream& props, const ParseOptions& options = {},
                         Diagnostics* diagnostics = nullptr);

Corpus ParseConll05(const std::string& words, const std::string& props,
                    const ParseOptions& options = {},
                    Diagnostics* diagnostics = nullptr);

struct Conll05Text {
  std::string words;
  std::string props;
};

// Throws SrlError(kModeMismatch) for head corpora.
Conll05Text SerializeConll05(const Corpus& corpus);

}  // namespace primesrl

#endif  // PRIMESRL_CONLL05_H_
