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

#include "testing/fixtures.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "primesrl/conll05.h"
#include "primesrl/conll09.h"
#include "primesrl/senses.h"

namespace primesrl::testing {

std::string FixturePath(const std::string& relative) {
  return std::string(PRIMESRL_FIXTURE_DIR) + "/" + relative;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Corpus LoadConll09Fixture(const std::string& relative) {
  ParseOptions options;
  options.source_name = relative;
  return ParseConll09(ReadFile(FixturePath(relative)), options);
}

Corpus LoadConll05Fixture(const std::string& table, const std::string& name) {
  ParseOptions options;
  options.source_name = table + "/" + name + ".props";
  Corpus corpus = ParseConll05(ReadFile(FixturePath(table + "/words.txt")),
                               ReadFile(FixturePath(table + "/" + name + ".props")),
                               options);
  const std::string senses_path = table + "/" + name + ".senses";
  std::istringstream senses(ReadFile(FixturePath(senses_path)));
  ApplySenses(corpus, ParseSenseSidecar(senses, senses_path), senses_path);
  return corpus;
}

}  // namespace primesrl::testing
