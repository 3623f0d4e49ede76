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

#include "greval/matcher.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

namespace greval {

std::string_view policy_name(MatchPolicy policy) {
  switch (policy) {
    case MatchPolicy::kStrict: return "strict";
    case MatchPolicy::kStandard: return "standard";
    case MatchPolicy::kHierarchical: return "hierarchical";
  }
  return "";
}

std::optional<MatchPolicy> policy_from_name(std::string_view name) {
  if (name == "strict") return MatchPolicy::kStrict;
  if (name == "standard") return MatchPolicy::kStandard;
  if (name == "hierarchical") return MatchPolicy::kHierarchical;
  return std::nullopt;
}

namespace {

bool relation_compatible(Relation pred, Relation gold, MatchPolicy policy) {
  switch (policy) {
    case MatchPolicy::kStrict:
      return pred == gold;
    case MatchPolicy::kStandard:
      if (pred == gold) return true;
      return (pred == Relation::kMod || pred == Relation::kSubj ||
              pred == Relation::kClausal) &&
             subsumes(pred, gold);
    case MatchPolicy::kHierarchical:
      return subsumes(pred, gold);
  }
  return false;
}

}  // namespace

bool compatible(const GrInstance& pred, const GrInstance& gold,
                MatchPolicy policy) {
  if (!relation_compatible(pred.relation(), gold.relation(), policy)) {
    return false;
  }
  constexpr Slot kSlots[] = {Slot::kType, Slot::kHead, Slot::kDependent,
                             Slot::kInitialGr};
  for (Slot s : kSlots) {
    const SlotValue* pv = pred.slot(s);
    const SlotValue* gv = gold.slot(s);
    if (!pv && !gv) continue;
    // A slot carried by only one signature must be unfilled on that side.
    if (!gv) {
      if (!is_unspecified(*pv)) return false;
      continue;
    }
    if (!pv) {
      if (!is_unspecified(*gv)) return false;
      continue;
    }
    if (is_unspecified(*pv)) {
      if (policy == MatchPolicy::kHierarchical) continue;
      if (policy == MatchPolicy::kStandard && s == Slot::kType &&
          type_slot_relaxable(pred.relation())) {
        continue;
      }
    }
    if (!slot_values_match(*pv, *gv)) return false;
  }
  return true;
}

namespace {

// Tiered weights: cardinality dominates exactness dominates standard-level
// compatibility. Counts per tier are bounded by the sentence size, far
// below the tier spacing.
constexpr int64_t kCardWeight = int64_t{1} << 40;
constexpr int64_t kExactWeight = int64_t{1} << 20;

// Maximum-total-weight one-to-one assignment over a nonnegative weight
// matrix (zero = no gain = effectively unmatched). Hungarian algorithm on
// the square zero-padded matrix, O(n^3).
int64_t max_weight_total(const std::vector<std::vector<int64_t>>& w) {
  int rows = static_cast<int>(w.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(w[0].size());
  if (cols == 0) return 0;
  int n = std::max(rows, cols);
  constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

  // Minimization form: a[i][j] = -w[i-1][j-1], padded with zeros.
  auto cost = [&](int i, int j) -> int64_t {
    return (i <= rows && j <= cols) ? -w[i - 1][j - 1] : 0;
  };
  std::vector<int64_t> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<int64_t> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0];
      int j1 = -1;
      int64_t delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        int64_t cur = cost(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  int64_t total = 0;
  for (int j = 1; j <= cols; ++j) {
    int i = p[j];
    if (i >= 1 && i <= rows) total += w[i - 1][j - 1];
  }
  return total;
}

}  // namespace

std::vector<AlignedPair> align_sentence(std::span<const GrInstance> pred,
                                        std::span<const GrInstance> gold,
                                        MatchPolicy policy) {
  int np = static_cast<int>(pred.size());
  int ng = static_cast<int>(gold.size());
  if (np == 0 || ng == 0) return {};

  std::vector<std::vector<int64_t>> w(ng, std::vector<int64_t>(np, 0));
  std::vector<std::vector<char>> is_exact(ng, std::vector<char>(np, 0));
  for (int g = 0; g < ng; ++g) {
    for (int p = 0; p < np; ++p) {
      if (!compatible(pred[p], gold[g], policy)) continue;
      bool exact = strict_equal(pred[p], gold[g]);
      bool standard = exact || compatible(pred[p], gold[g], MatchPolicy::kStandard);
      is_exact[g][p] = exact;
      w[g][p] = kCardWeight + (exact ? kExactWeight : 0) + (standard ? 1 : 0);
    }
  }

  auto solve = [&](const std::vector<int>& gs,
                   const std::vector<int>& ps) -> int64_t {
    if (gs.empty() || ps.empty()) return 0;
    std::vector<std::vector<int64_t>> sub(gs.size(),
                                          std::vector<int64_t>(ps.size()));
    for (size_t i = 0; i < gs.size(); ++i) {
      for (size_t j = 0; j < ps.size(); ++j) sub[i][j] = w[gs[i]][ps[j]];
    }
    return max_weight_total(sub);
  };

  std::vector<int> gs(ng), ps(np);
  std::iota(gs.begin(), gs.end(), 0);
  std::iota(ps.begin(), ps.end(), 0);
  const int64_t best = solve(gs, ps);

  // Greedy lexicographic refinement: commit the smallest (gold, pred) pair
  // that still admits an optimal completion; a gold with no committable
  // partner is unmatched in every optimal alignment and is dropped.
  std::vector<AlignedPair> result;
  int64_t forced = 0;
  for (int g = 0; g < ng; ++g) {
    std::vector<int> gs_rest;
    gs_rest.reserve(gs.size() - 1);
    for (int x : gs) {
      if (x != g) gs_rest.push_back(x);
    }
    bool committed = false;
    for (size_t pi = 0; pi < ps.size() && !committed; ++pi) {
      int p = ps[pi];
      if (w[g][p] == 0) continue;
      std::vector<int> ps_rest;
      ps_rest.reserve(ps.size() - 1);
      for (int x : ps) {
        if (x != p) ps_rest.push_back(x);
      }
      if (forced + w[g][p] + solve(gs_rest, ps_rest) == best) {
        result.push_back({p, g, is_exact[g][p] != 0});
        forced += w[g][p];
        ps = std::move(ps_rest);
        committed = true;
      }
    }
    gs = std::move(gs_rest);
  }
  return result;
}

}  // namespace greval
