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

#ifndef GREVAL_MATCHER_H_
#define GREVAL_MATCHER_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "greval/gr.h"

namespace greval {

// How far a predicted GR may deviate from a gold GR and still count:
//   strict        — same relation, all slot values equal.
//   standard      — predicted mod/subj/clausal may stand in for any gold
//                   descendant, and an unfilled predicted type slot in the
//                   modifier/iobj/clausal families matches any gold type.
//   hierarchical  — any predicted relation matches any gold relation it
//                   subsumes, and every unfilled predicted slot is a
//                   wildcard.
enum class MatchPolicy { kStrict, kStandard, kHierarchical };

std::string_view policy_name(MatchPolicy policy);
std::optional<MatchPolicy> policy_from_name(std::string_view name);

// True iff pred may stand for gold under the policy. Slot values compare
// per slot role; a slot present in only one signature must be unfilled on
// that side. Compatibility widens monotonically from strict to standard to
// hierarchical.
bool compatible(const GrInstance& pred, const GrInstance& gold,
                MatchPolicy policy);

inline bool strict_equal(const GrInstance& pred, const GrInstance& gold) {
  return compatible(pred, gold, MatchPolicy::kStrict);
}

struct AlignedPair {
  int pred_index;
  int gold_index;
  bool exact;  // strict_equal held for this pair
};

// One-to-one alignment of the two GR multisets of a sentence. The result
// is the unique matching that, in order of priority:
//   1. has maximum cardinality under `compatible`,
//   2. maximizes the number of exact (strict-equal) pairs,
//   3. maximizes the number of pairs compatible under the standard policy,
//   4. is lexicographically least as a (gold index, pred index) pair list.
// Priority 3 keeps per-relation matched counts from regressing when a
// relaxed policy admits extra pairings of equal size. Pairs are returned
// sorted by gold index.
std::vector<AlignedPair> align_sentence(std::span<const GrInstance> pred,
                                        std::span<const GrInstance> gold,
                                        MatchPolicy policy);

}  // namespace greval

#endif  // GREVAL_MATCHER_H_
