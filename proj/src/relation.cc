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

#include "greval/relation.h"

#include <array>
#include <string>
#include <unordered_map>

namespace greval {

namespace {

struct RelationInfo {
  std::string_view name;
  int depth;
  std::vector<Relation> parents;
};

const std::array<RelationInfo, kRelationCount>& relation_table() {
  static const std::array<RelationInfo, kRelationCount> table = {{
      {"dependent", 0, {}},
      {"mod", 1, {Relation::kDependent}},
      {"ncmod", 2, {Relation::kMod}},
      {"xmod", 2, {Relation::kMod}},
      {"cmod", 2, {Relation::kMod}},
      {"arg_mod", 1, {Relation::kDependent}},
      {"arg", 1, {Relation::kDependent}},
      {"subj", 2, {Relation::kArg, Relation::kSubjOrDobj}},
      {"ncsubj", 3, {Relation::kSubj}},
      {"xsubj", 3, {Relation::kSubj}},
      {"csubj", 3, {Relation::kSubj}},
      {"subj_or_dobj", 2, {Relation::kArg}},
      {"comp", 2, {Relation::kArg}},
      {"obj", 3, {Relation::kComp}},
      {"dobj", 4, {Relation::kObj, Relation::kSubjOrDobj}},
      {"obj2", 4, {Relation::kObj}},
      {"iobj", 4, {Relation::kObj}},
      {"clausal", 3, {Relation::kComp}},
      {"xcomp", 4, {Relation::kClausal}},
      {"ccomp", 4, {Relation::kClausal}},
  }};
  return table;
}

// Transitive closure over the parent lists. ancestors[i] has bit j set iff
// relation j subsumes relation i (self included).
const std::array<uint32_t, kRelationCount>& ancestor_masks() {
  static const std::array<uint32_t, kRelationCount> masks = [] {
    std::array<uint32_t, kRelationCount> m{};
    // Parents precede children in report order except for subj_or_dobj,
    // which precedes neither of its children, so iterate to a fixed point.
    for (int i = 0; i < kRelationCount; ++i) m[i] = uint32_t{1} << i;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < kRelationCount; ++i) {
        for (Relation p : relation_table()[i].parents) {
          uint32_t merged = m[i] | m[static_cast<int>(p)];
          if (merged != m[i]) {
            m[i] = merged;
            changed = true;
          }
        }
      }
    }
    return m;
  }();
  return masks;
}

const std::array<uint32_t, kRelationCount>& cone_masks() {
  static const std::array<uint32_t, kRelationCount> masks = [] {
    std::array<uint32_t, kRelationCount> m{};
    for (int d = 0; d < kRelationCount; ++d) {
      uint32_t anc = ancestor_masks()[d];
      for (int a = 0; a < kRelationCount; ++a) {
        if (anc & (uint32_t{1} << a)) m[a] |= uint32_t{1} << d;
      }
    }
    return m;
  }();
  return masks;
}

constexpr std::array<Slot, 2> kHeadDep = {Slot::kHead, Slot::kDependent};
constexpr std::array<Slot, 3> kTypeHeadDep = {Slot::kType, Slot::kHead,
                                              Slot::kDependent};
constexpr std::array<Slot, 3> kHeadDepIgr = {Slot::kHead, Slot::kDependent,
                                             Slot::kInitialGr};
constexpr std::array<Slot, 4> kTypeHeadDepIgr = {
    Slot::kType, Slot::kHead, Slot::kDependent, Slot::kInitialGr};

}  // namespace

std::string_view relation_name(Relation r) {
  return relation_table()[static_cast<int>(r)].name;
}

std::optional<Relation> relation_from_name(std::string_view name) {
  static const std::unordered_map<std::string_view, Relation> index = [] {
    std::unordered_map<std::string_view, Relation> m;
    for (int i = 0; i < kRelationCount; ++i) {
      m.emplace(relation_table()[i].name, static_cast<Relation>(i));
    }
    return m;
  }();
  auto it = index.find(name);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::string_view slot_name(Slot s) {
  switch (s) {
    case Slot::kType: return "type";
    case Slot::kHead: return "head";
    case Slot::kDependent: return "dependent";
    case Slot::kInitialGr: return "initial_gr";
  }
  return "";
}

std::span<const Relation> all_relations() {
  static const std::array<Relation, kRelationCount> all = [] {
    std::array<Relation, kRelationCount> a{};
    for (int i = 0; i < kRelationCount; ++i) a[i] = static_cast<Relation>(i);
    return a;
  }();
  return all;
}

std::span<const Relation> parents(Relation r) {
  return relation_table()[static_cast<int>(r)].parents;
}

int hierarchy_depth(Relation r) {
  return relation_table()[static_cast<int>(r)].depth;
}

bool is_leaf(Relation r) {
  return cone_masks()[static_cast<int>(r)] == relation_bit(r);
}

bool subsumes(Relation ancestor, Relation descendant) {
  return (ancestor_masks()[static_cast<int>(descendant)] &
          relation_bit(ancestor)) != 0;
}

std::vector<Relation> cone(Relation r) {
  std::vector<Relation> out;
  uint32_t mask = cone_masks()[static_cast<int>(r)];
  for (int i = 0; i < kRelationCount; ++i) {
    if (mask & (uint32_t{1} << i)) out.push_back(static_cast<Relation>(i));
  }
  return out;
}

uint32_t cone_mask(Relation r) { return cone_masks()[static_cast<int>(r)]; }

uint32_t ancestor_mask(Relation r) {
  return ancestor_masks()[static_cast<int>(r)];
}

bool type_slot_relaxable(Relation r) {
  switch (r) {
    case Relation::kMod:
    case Relation::kNcmod:
    case Relation::kXmod:
    case Relation::kCmod:
    case Relation::kIobj:
    case Relation::kClausal:
    case Relation::kXcomp:
    case Relation::kCcomp:
      return true;
    default:
      return false;
  }
}

std::span<const Slot> signature_of(Relation r) {
  switch (r) {
    case Relation::kMod:
    case Relation::kNcmod:
    case Relation::kXmod:
    case Relation::kCmod:
    case Relation::kIobj:
    case Relation::kClausal:
    case Relation::kXcomp:
    case Relation::kCcomp:
      return kTypeHeadDep;
    case Relation::kArgMod:
      return kTypeHeadDepIgr;
    case Relation::kSubj:
    case Relation::kNcsubj:
    case Relation::kXsubj:
    case Relation::kCsubj:
    case Relation::kSubjOrDobj:
    case Relation::kDobj:
      return kHeadDepIgr;
    case Relation::kDependent:
    case Relation::kArg:
    case Relation::kComp:
    case Relation::kObj:
    case Relation::kObj2:
      return kHeadDep;
  }
  return kHeadDep;
}

int slot_position(Relation r, Slot s) {
  auto sig = signature_of(r);
  for (int i = 0; i < static_cast<int>(sig.size()); ++i) {
    if (sig[i] == s) return i;
  }
  return -1;
}

}  // namespace greval
