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

#ifndef GREVAL_RELATION_H_
#define GREVAL_RELATION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace greval {

// The grammatical relation inventory, in report order (most generic first,
// each family grouped under its parent). The hierarchy is a rooted DAG:
// subj and dobj each have two parents (subj_or_dobj is a disjunction node).
enum class Relation : uint8_t {
  kDependent = 0,
  kMod,
  kNcmod,
  kXmod,
  kCmod,
  kArgMod,
  kArg,
  kSubj,
  kNcsubj,
  kXsubj,
  kCsubj,
  kSubjOrDobj,
  kComp,
  kObj,
  kDobj,
  kObj2,
  kIobj,
  kClausal,
  kXcomp,
  kCcomp,
};

inline constexpr int kRelationCount = 20;

// Slot roles a relation's tuple can carry, in surface order.
enum class Slot : uint8_t { kType, kHead, kDependent, kInitialGr };

std::string_view relation_name(Relation r);
std::optional<Relation> relation_from_name(std::string_view name);
std::string_view slot_name(Slot s);

// All relations in report order.
std::span<const Relation> all_relations();

// Direct parents of r in the hierarchy (empty for the root).
std::span<const Relation> parents(Relation r);

// Indentation level used by the frequency and accuracy reports.
int hierarchy_depth(Relation r);

bool is_leaf(Relation r);

// True iff ancestor == descendant or a directed path ancestor -> descendant
// exists. Reflexive and transitive.
bool subsumes(Relation ancestor, Relation descendant);

// {d : subsumes(r, d)}, in report order.
std::vector<Relation> cone(Relation r);

// Bitmask forms of cone/ancestry, bit i = relation with ordinal i.
// ancestor_mask(r) includes r itself, so
//   subsumes(a, d)  <=>  ancestor_mask(d) & bit(a).
uint32_t cone_mask(Relation r);
uint32_t ancestor_mask(Relation r);

inline uint32_t relation_bit(Relation r) {
  return uint32_t{1} << static_cast<int>(r);
}

// Relations whose type slot a parser may leave unfilled (the modifier,
// iobj, and clausal families); shared by the relaxed match policies and
// gold-corpus validation.
bool type_slot_relaxable(Relation r);

// Slot layout of a relation's tuple, e.g. (type, head, dependent) for the
// modifier family or (head, dependent, initial_gr) for the subject family.
std::span<const Slot> signature_of(Relation r);

// Position of slot s within signature_of(r), or -1 when absent.
int slot_position(Relation r, Slot s);

}  // namespace greval

#endif  // GREVAL_RELATION_H_
