// Copyright 2026 The greval Authors
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

#ifndef GREVAL_GR_H_
#define GREVAL_GR_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "greval/relation.h"

namespace greval {

// An unfilled slot, written `_`.
struct Unspecified {
  bool operator==(const Unspecified&) const = default;
};

// An argument present in the analysis but not lexically realised (pro-drop).
// `Pro` is a reserved, case-sensitive token; legal only in dependent slots.
struct Pro {
  bool operator==(const Pro&) const = default;
};

// A base-form word, optionally anchored to a 1-based token position so that
// repeated words within one sentence can be told apart (surface syntax
// `lemma:N`). The lemma is stored as written; comparisons fold case.
struct Lexeme {
  std::string lemma;
  std::optional<int> index;

  bool operator==(const Lexeme&) const = default;
};

// A relation name used as a slot value; legal only in initial_gr slots,
// where it records the underlying relation of a displaced argument.
struct GrName {
  Relation relation;

  bool operator==(const GrName&) const = default;
};

// operator== on SlotValue is structural (case- and index-sensitive) and is
// what round-trip/model equality uses. slot_values_match() below is the
// looser comparison the matcher uses.
using SlotValue = std::variant<Unspecified, Pro, Lexeme, GrName>;

bool is_unspecified(const SlotValue& v);

// Slot-value equality as used in GR comparison: lexeme lemmas fold case, and
// token indices participate only when both sides carry one.
bool slot_values_match(const SlotValue& a, const SlotValue& b);

// ASCII case-insensitive lemma comparison.
bool lemma_equal(std::string_view a, std::string_view b);

// True for a token usable as a lemma: non-empty, no whitespace, parentheses
// or commas, and not the reserved `Pro`.
bool is_valid_lemma(std::string_view lemma);

// Reduces a (possibly multi-token) head to a single lower-cased lemma:
// the final whitespace-separated token, case-folded. Throws
// std::invalid_argument on empty input or an invalid final token.
Lexeme normalize_lexeme(std::string_view raw);

// One grammatical relation tuple. Construction validates the values against
// the relation's slot signature:
//   - value count matches the signature arity,
//   - the head slot holds a Lexeme,
//   - Pro appears only in dependent slots,
//   - GrName appears only in initial_gr slots,
//   - lexeme lemmas are well formed.
// Violations throw std::invalid_argument. Instances are immutable.
class GrInstance {
 public:
  GrInstance(Relation relation, std::vector<SlotValue> values);

  Relation relation() const { return relation_; }
  const std::vector<SlotValue>& values() const { return values_; }

  // Value of slot s, or nullptr when s is not part of this relation's
  // signature.
  const SlotValue* slot(Slot s) const;

  bool operator==(const GrInstance&) const = default;

 private:
  Relation relation_;
  std::vector<SlotValue> values_;
};

// `relation(v1, v2, ...)` rendering, `_` for unspecified slots.
std::string to_string(const GrInstance& gr);
std::string to_string(const SlotValue& v);

}  // namespace greval

#endif  // GREVAL_GR_H_
