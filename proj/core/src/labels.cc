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

#include "primesrl/labels.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <tuple>
#include <utility>

#include "primesrl/errors.h"

namespace primesrl {
namespace {

// Adjunct tags that circulate without the AM- prefix in hand-written
// examples.
constexpr std::array<std::string_view, 22> kBareModifierTags = {
    "ADJ", "ADV", "CAU", "COM", "CXN", "DIR", "DIS", "DSP",
    "EXT", "GOL", "LOC", "LVB", "MNR", "MOD", "NEG", "PNC",
    "PRD", "PRP", "PRR", "PRX", "REC", "TMP"};

bool IsDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

bool ConsumePrefix(std::string_view& s, std::string_view prefix) {
  if (s.size() > prefix.size() && s.substr(0, prefix.size()) == prefix) {
    s.remove_prefix(prefix.size());
    return true;
  }
  return false;
}

std::pair<RoleFamily, std::string> CanonicalBase(std::string_view base) {
  if (base == "V") return {RoleFamily::kVerb, "V"};
  if (base == "AA" || base == "ARGA") return {RoleFamily::kCore, "AA"};
  if (base.size() == 2 && base[0] == 'A' && base[1] >= '0' && base[1] <= '5') {
    return {RoleFamily::kCore, std::string(base)};
  }
  if (base.size() == 4 && base.substr(0, 3) == "ARG" && base[3] >= '0' &&
      base[3] <= '5') {
    return {RoleFamily::kCore, std::string("A") + base[3]};
  }
  std::string_view tag = base;
  if (ConsumePrefix(tag, "AM-") || ConsumePrefix(tag, "ARGM-")) {
    return {RoleFamily::kModifier, "AM-" + std::string(tag)};
  }
  if (std::find(kBareModifierTags.begin(), kBareModifierTags.end(), base) !=
      kBareModifierTags.end()) {
    return {RoleFamily::kModifier, "AM-" + std::string(base)};
  }
  return {RoleFamily::kOther, std::string(base)};
}

}  // namespace

SenseLabel::SenseLabel(std::string lemma, std::string sense_id)
    : lemma_(std::move(lemma)), sense_id_(std::move(sense_id)) {}

std::optional<SenseLabel> SenseLabel::Parse(std::string_view text) {
  const auto dot = text.rfind('.');
  if (dot == std::string_view::npos || dot == 0) return std::nullopt;
  std::string_view sense = text.substr(dot + 1);
  if (!IsDigits(sense)) return std::nullopt;
  return SenseLabel(std::string(text.substr(0, dot)), std::string(sense));
}

std::string SenseLabel::NormalizedSenseId() const {
  if (sense_id_.size() >= 2) return sense_id_;
  return std::string(2 - sense_id_.size(), '0') + sense_id_;
}

bool SenseLabel::JointlyEquals(const SenseLabel& other) const {
  return lemma_ == other.lemma_ && SameSenseNumber(other);
}

bool SenseLabel::SameSenseNumber(const SenseLabel& other) const {
  return NormalizedSenseId() == other.NormalizedSenseId();
}

RoleLabel::RoleLabel(RoleFamily family, std::string base, bool continuation,
                     bool reference)
    : family_(family),
      base_(std::move(base)),
      continuation_(continuation),
      reference_(reference) {}

RoleLabel RoleLabel::Parse(std::string_view text) {
  std::string_view rest = text;
  bool continuation = false;
  bool reference = false;
  for (;;) {
    if (ConsumePrefix(rest, "C-")) {
      if (continuation) {
        throw SrlError(ErrorKind::kMalformedLabel,
                       "repeated C- prefix in '" + std::string(text) + "'");
      }
      continuation = true;
    } else if (ConsumePrefix(rest, "R-")) {
      if (reference) {
        throw SrlError(ErrorKind::kMalformedLabel,
                       "repeated R- prefix in '" + std::string(text) + "'");
      }
      reference = true;
    } else {
      break;
    }
  }
  const bool bad_char =
      std::any_of(rest.begin(), rest.end(), [](unsigned char c) {
        return std::isspace(c) || c == '(' || c == ')' || c == '*';
      });
  if (rest.empty() || bad_char || rest == "C-" || rest == "R-" ||
      rest.back() == '-') {
    throw SrlError(ErrorKind::kMalformedLabel,
                   "cannot parse label '" + std::string(text) + "'");
  }
  auto [family, base] = CanonicalBase(rest);
  return RoleLabel(family, std::move(base), continuation, reference);
}

RoleLabel RoleLabel::Core(int number, bool continuation, bool reference) {
  std::string base = number < 0 ? "AA" : "A" + std::to_string(number);
  return RoleLabel(RoleFamily::kCore, std::move(base), continuation,
                   reference);
}

RoleLabel RoleLabel::Modifier(std::string_view tag, bool continuation,
                              bool reference) {
  return RoleLabel(RoleFamily::kModifier, "AM-" + std::string(tag),
                   continuation, reference);
}

RoleLabel RoleLabel::WithContinuation(bool continuation) const {
  RoleLabel copy = *this;
  copy.continuation_ = continuation;
  return copy;
}

RoleLabel RoleLabel::WithReference(bool reference) const {
  RoleLabel copy = *this;
  copy.reference_ = reference;
  return copy;
}

std::string RoleLabel::ToString() const {
  std::string out;
  if (reference_) out += "R-";
  if (continuation_) out += "C-";
  out += base_;
  return out;
}

std::strong_ordering operator<=>(const RoleLabel& a, const RoleLabel& b) {
  return std::tie(a.base_, a.reference_, a.continuation_) <=>
         std::tie(b.base_, b.reference_, b.continuation_);
}

RoleFamily FamilyOfBase(std::string_view base) {
  return CanonicalBase(base).first;
}

ArgumentClass Classify(const RoleLabel& label, UnknownLabelPolicy policy) {
  switch (label.family()) {
    case RoleFamily::kCore:
      return ArgumentClass::kCore;
    case RoleFamily::kModifier:
      return ArgumentClass::kModifier;
    case RoleFamily::kVerb:
    case RoleFamily::kOther:
      break;
  }
  if (policy == UnknownLabelPolicy::kTreatAsModifier) {
    return ArgumentClass::kModifier;
  }
  throw SrlError(ErrorKind::kUnknownLabel,
                 "label '" + label.ToString() +
                     "' is neither a numbered core role nor an AM- modifier");
}

bool BaseLabelOrder::operator()(const std::string& a,
                                const std::string& b) const {
  auto rank = [](const std::string& s) {
    switch (FamilyOfBase(s)) {
      case RoleFamily::kCore: return 0;
      case RoleFamily::kModifier: return 1;
      case RoleFamily::kVerb: return 3;
      case RoleFamily::kOther: return 2;
    }
    return 2;
  };
  return std::pair(rank(a), std::string_view(a)) <
         std::pair(rank(b), std::string_view(b));
}

}  // namespace primesrl
