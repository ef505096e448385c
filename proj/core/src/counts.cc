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

#include "primesrl/counts.h"

namespace primesrl {

PrecisionRecall ComputeF1(const EvalCounts& counts) {
  PrecisionRecall out;
  if (counts.predicted > 0) {
    out.precision = static_cast<double>(counts.correct) /
                    static_cast<double>(counts.predicted);
  }
  if (counts.gold > 0) {
    out.recall =
        static_cast<double>(counts.correct) / static_cast<double>(counts.gold);
  }
  if (out.precision + out.recall > 0.0) {
    out.f1 = 2.0 * out.precision * out.recall / (out.precision + out.recall);
  }
  return out;
}

}  // namespace primesrl
