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

#ifndef PRIMESRL_COUNTS_H_
#define PRIMESRL_COUNTS_H_

#include <cstdint>

namespace primesrl {

// Correct / predicted / gold tallies. Invariant: correct <= predicted and
// correct <= gold.
struct EvalCounts {
  std::int64_t correct = 0;
  std::int64_t predicted = 0;
  std::int64_t gold = 0;

  bool IsValid() const {
    return correct >= 0 && correct <= predicted && correct <= gold;
  }

  EvalCounts& operator+=(const EvalCounts& other) {
    correct += other.correct;
    predicted += other.predicted;
    gold += other.gold;
    return *this;
  }

  friend bool operator==(const EvalCounts&, const EvalCounts&) = default;
};

// Field-wise sum. Associative and commutative with identity {0, 0, 0}.
inline EvalCounts MergeCounts(EvalCounts a, const EvalCounts& b) {
  return a += b;
}

inline EvalCounts operator+(EvalCounts a, const EvalCounts& b) {
  return a += b;
}

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Zero denominators yield 0 rather than NaN.
PrecisionRecall ComputeF1(const EvalCounts& counts);

}  // namespace primesrl

#endif  // PRIMESRL_COUNTS_H_
