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


#include <benchmark/benchmark.h>

#include <random>
#include <sstream>
#include <string>

#include "primesrl/align.h"
#include "primesrl/conll09.h"
#include "primesrl/scoring.h"

namespace primesrl {
namespace {

// A deterministic CoNLL-2009 document: every fourth token is a predicate
// with a few arguments, some split and some relative.
std::string SyntheticConll09(int sentences, unsigned seed) {
  std::mt19937 rng(seed);
  const char* labels[] = {"A0", "A1", "A2", "AM-TMP", "C-A1", "R-A0"};
  std::ostringstream out;
  for (int s = 0; s < sentences; ++s) {
    const int n = 12 + static_cast<int>(rng() % 20);
    const int preds = n / 4;
    for (int t = 1; t <= n; ++t) {
      const bool is_pred = t % 4 == 0;
      out << t << "\tw" << t << "\tw" << t << "\tw" << t
          << "\tNN\tNN\t_\t_\t0\t0\tROOT\tROOT\t" << (is_pred ? "Y" : "_")
          << "\t" << (is_pred ? "buy.0" + std::to_string(1 + rng() % 3) : "_");
      for (int p = 0; p < preds; ++p) {
        out << "\t" << (rng() % 4 == 0 ? labels[rng() % 6] : "_");
      }
      out << "\n";
    }
    out << "\n";
  }
  return out.str();
}

void BM_ParseConll09(benchmark::State& state) {
  const std::string text = SyntheticConll09(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ParseConll09(text));
  }
  state.SetBytesProcessed(state.iterations() *
                          static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_ParseConll09)->Arg(100)->Arg(1000);

void BM_Evaluate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Corpus gold = ParseConll09(SyntheticConll09(n, 1));
  const Corpus system = ParseConll09(SyntheticConll09(n, 1));
  const Metric metric = static_cast<Metric>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Evaluate(gold, system, metric, Mode::kHead));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Evaluate)
    ->Args({1000, static_cast<int>(Metric::kPrimeSrl)})
    ->Args({1000, static_cast<int>(Metric::kLegacyHead)});

}  // namespace
}  // namespace primesrl

BENCHMARK_MAIN();
