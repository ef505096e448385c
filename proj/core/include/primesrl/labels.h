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

#ifndef PRIMESRL_LABELS_H_
#define PRIMESRL_LABELS_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace primesrl {

// A PropBank roleset identifier such as "buy.01". The lemma may itself
// contain dots ("a.m.01"); the sense number follows the last one.
class SenseLabel {
 public:
  SenseLabel(std::string lemma, std::string sense_id);

  // Returns nullopt unless `text` is lemma "." digits with both parts
  // non-empty.
  static std::optional<SenseLabel> Parse(std::string_view text);

  const std::string& lemma() const { return lemma_; }
  const std::string& sense_id() const { return sense_id_; }

  // Sense number left-padded with zeros to two digits, so "1" and "01"
  // compare equal.
  std::string NormalizedSenseId() const;

  std::string ToString() const { return lemma_ + "." + sense_id_; }

  // Lemma and sense number both agree.
  bool JointlyEquals(const SenseLabel& other) const;
  // Only the sense number agrees; the lemma is ignored.
  bool SameSenseNumber(const SenseLabel& other) const;

  friend bool operator==(const SenseLabel& a, const SenseLabel& b) {
    return a.JointlyEquals(b);
  }

 private:
  std::string lemma_;
  std::string sense_id_;
};

enum class RoleFamily {
  kCore,      // A0-A5, AA
  kModifier,  // AM-*
  kVerb,      // V: parsed but never scored
  kOther,     // anything else the parser let through
};

// A normalized argument label: a base role plus optional continuation (C-)
// and reference (R-) prefixes. Long PropBank spellings are folded into the
// short ones, so "ARG0" is "A0", "ARGM-TMP" and bare "TMP" are "AM-TMP".
class RoleLabel {
 public:
  // Throws SrlError(kMalformedLabel) on empty bases and repeated prefixes.
  // Unrecognized bases are accepted with family kOther.
  static RoleLabel Parse(std::string_view text);

  // A negative number builds AA.
  static RoleLabel Core(int number, bool continuation = false,
                        bool reference = false);
  static RoleLabel Modifier(std::string_view tag, bool continuation = false,
                            bool reference = false);

  RoleFamily family() const { return family_; }
  // Canonical base without prefixes, e.g. "A0" or "AM-TMP".
  const std::string& base() const { return base_; }
  bool is_continuation() const { return continuation_; }
  bool is_reference() const { return reference_; }
  bool is_scorable() const { return family_ != RoleFamily::kVerb; }

  RoleLabel WithContinuation(bool continuation) const;
  RoleLabel WithReference(bool reference) const;

  // "R-" then "C-" then the base.
  std::string ToString() const;

  friend bool operator==(const RoleLabel&, const RoleLabel&) = default;
  friend std::strong_ordering operator<=>(const RoleLabel& a,
                                          const RoleLabel& b);

 private:
  RoleLabel(RoleFamily family, std::string base, bool continuation,
            bool reference);

  RoleFamily family_;
  std::string base_;
  bool continuation_;
  bool reference_;
};

// Family of a canonical base string, as produced by RoleLabel::base().
RoleFamily FamilyOfBase(std::string_view base);

enum class ArgumentClass { kCore, kModifier };

enum class UnknownLabelPolicy {
  kReject,           // throw SrlError(kUnknownLabel)
  kTreatAsModifier,  // score as a modifier; callers may warn
};

// Core for numbered roles, Modifier for AM-*. Prefixes are ignored, so
// R-AM-TMP is a modifier and R-A0 is core.
ArgumentClass Classify(const RoleLabel& label,
                       UnknownLabelPolicy policy = UnknownLabelPolicy::kReject);

// Report ordering over base labels: core roles ascending, then modifiers
// alphabetically, then everything else alphabetically.
struct BaseLabelOrder {
  bool operator()(const std::string& a, const std::string& b) const;
};

}  // namespace primesrl

#endif  // PRIMESRL_LABELS_H_
