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

#ifndef PRIMESRL_TESTS_TESTING_FIXTURES_H_
#define PRIMESRL_TESTS_TESTING_FIXTURES_H_

#include <string>

#include "primesrl/corpus.h"

namespace primesrl::testing {

// `relative` is resolved against the fixtures directory baked in at build
// time, e.g. "continuation/p4.conll09".
std::string FixturePath(const std::string& relative);
std::string ReadFile(const std::string& path);

Corpus LoadConll09Fixture(const std::string& relative);

// Loads "<table>/words.txt", "<table>/<name>.props" and applies
// "<table>/<name>.senses".
Corpus LoadConll05Fixture(const std::string& table, const std::string& name);

}  // namespace primesrl::testing

#endif  // PRIMESRL_TESTS_TESTING_FIXTURES_H_
