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
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "alignment_oracle.h"
#include "doctest.h"
#include "greval/corpus_io.h"
#include "greval/gr.h"
#include "greval/relation.h"
#include "random_gr.h"

#ifndef GREVAL_DATA_DIR
#define GREVAL_DATA_DIR "data"
#endif

namespace greval {
namespace {

SlotValue unspec() { return Unspecified{}; }
SlotValue pro() { return Pro{}; }
SlotValue lex(const char* s) { return Lexeme{s, {}}; }
SlotValue lexi(const char* s, int i) { return Lexeme{s, i}; }
SlotValue igr(Relation r) { return GrName{r}; }

GrInstance mk(Relation r, std::vector<SlotValue> values) {
  return GrInstance(r, std::move(values));
}

constexpr MatchPolicy kPolicies[] = {MatchPolicy::kStrict, MatchPolicy::kStandard,
                                     MatchPolicy::kHierarchical};

TEST_CASE("policy names round-trip") {
  CHECK(std::string(policy_name(MatchPolicy::kStrict)) == "strict");
  CHECK(std::string(policy_name(MatchPolicy::kStandard)) == "standard");
  CHECK(std::string(policy_name(MatchPolicy::kHierarchical)) ==
        "hierarchical");
  for (MatchPolicy p : kPolicies) {
    auto back = policy_from_name(policy_name(p));
    REQUIRE(back.has_value());
    CHECK(*back == p);
  }
  CHECK(!policy_from_name("").has_value());
  CHECK(!policy_from_name("Strict").has_value());
  CHECK(!policy_from_name("lenient").has_value());
}

TEST_CASE("strict compatibility folds case and partial indices only") {
  GrInstance a = mk(Relation::kNcsubj, {lex("die"), lex("proprietor"), unspec()});
  GrInstance b =
      mk(Relation::kNcsubj, {lex("Die"), lex("Proprietor"), unspec()});
  CHECK(compatible(a, b, MatchPolicy::kStrict));
  CHECK(compatible(b, a, MatchPolicy::kStrict));

  // An explicit token index only has to agree when both sides carry one.
  GrInstance i3 = mk(Relation::kDobj, {lex("drop"), lexi("it", 3), unspec()});
  GrInstance i5 = mk(Relation::kDobj, {lex("drop"), lexi("it", 5), unspec()});
  GrInstance bare = mk(Relation::kDobj, {lex("drop"), lex("it"), unspec()});
  CHECK(!compatible(i3, i5, MatchPolicy::kStrict));
  CHECK(compatible(i3, bare, MatchPolicy::kStrict));
  CHECK(compatible(bare, i5, MatchPolicy::kStrict));

  // Same slots under a sibling relation never match strictly.
  GrInstance x = mk(Relation::kXsubj, {lex("die"), lex("proprietor"), unspec()});
  CHECK(!compatible(x, a, MatchPolicy::kStrict));

  // Pro is a distinct value, not the lexeme "pro".
  GrInstance with_pro = mk(Relation::kNcsubj, {lex("die"), pro(), unspec()});
  GrInstance with_lex = mk(Relation::kNcsubj, {lex("die"), lex("pro"), unspec()});
  CHECK(!compatible(with_pro, with_lex, MatchPolicy::kStrict));
  CHECK(!compatible(with_lex, with_pro, MatchPolicy::kStrict));
  CHECK(compatible(with_pro, with_pro, MatchPolicy::kStrict));
}

TEST_CASE("standard policy generalizes modifier, subject, and clausal heads") {
  GrInstance gold_nc =
      mk(Relation::kNcsubj, {lex("die"), lex("proprietor"), unspec()});
  GrInstance pred_subj =
      mk(Relation::kSubj, {lex("die"), lex("proprietor"), unspec()});
  CHECK(!compatible(pred_subj, gold_nc, MatchPolicy::kStrict));
  CHECK(compatible(pred_subj, gold_nc, MatchPolicy::kStandard));
  CHECK(compatible(pred_subj, gold_nc, MatchPolicy::kHierarchical));
  // Generalization is one-directional: a leaf prediction does not absorb a
  // more general gold relation.
  CHECK(!compatible(gold_nc, pred_subj, MatchPolicy::kStandard));
  CHECK(!compatible(gold_nc, pred_subj, MatchPolicy::kHierarchical));

  GrInstance gold_x = mk(Relation::kXcomp, {lex("to"), lex("decide"), lex("drop")});
  GrInstance pred_cl =
      mk(Relation::kClausal, {unspec(), lex("decide"), lex("drop")});
  CHECK(compatible(pred_cl, gold_x, MatchPolicy::kStandard));
  CHECK(compatible(pred_cl, gold_x, MatchPolicy::kHierarchical));
  CHECK(!compatible(pred_cl, gold_x, MatchPolicy::kStrict));

  GrInstance gold_cm = mk(Relation::kCmod, {lex("when"), lex("become"), lex("die")});
  GrInstance pred_mod = mk(Relation::kMod, {lex("when"), lex("become"), lex("die")});
  CHECK(compatible(pred_mod, gold_cm, MatchPolicy::kStandard));

  // The subj/dobj disjunction subsumes subj and dobj, not the other way
  // around: a subj prediction never matches a subj_or_dobj gold.
  GrInstance gold_sd =
      mk(Relation::kSubjOrDobj, {lex("acquire"), lex("it"), unspec()});
  GrInstance pred_subj2 =
      mk(Relation::kSubj, {lex("acquire"), lex("it"), unspec()});
  CHECK(!compatible(pred_subj2, gold_sd, MatchPolicy::kStandard));
  CHECK(!compatible(pred_subj2, gold_sd, MatchPolicy::kHierarchical));
  // A subj_or_dobj prediction covers dobj golds, but only under the
  // hierarchical policy: the disjunction is not one of the three
  // generalizable families.
  GrInstance gold_dobj = mk(Relation::kDobj, {lex("drop"), lex("it"), unspec()});
  GrInstance pred_sd =
      mk(Relation::kSubjOrDobj, {lex("drop"), lex("it"), unspec()});
  CHECK(!compatible(pred_sd, gold_dobj, MatchPolicy::kStandard));
  CHECK(compatible(pred_sd, gold_dobj, MatchPolicy::kHierarchical));
  GrInstance pred_obj = mk(Relation::kObj, {lex("drop"), lex("it")});
  CHECK(!compatible(pred_obj, gold_dobj, MatchPolicy::kStandard));
  CHECK(compatible(pred_obj, gold_dobj, MatchPolicy::kHierarchical));

  GrInstance pred_arg = mk(Relation::kArg, {lex("decide"), lex("government")});
  GrInstance gold_govt =
      mk(Relation::kNcsubj, {lex("decide"), lex("government"), unspec()});
  CHECK(!compatible(pred_arg, gold_govt, MatchPolicy::kStandard));
  CHECK(compatible(pred_arg, gold_govt, MatchPolicy::kHierarchical));
}

TEST_CASE("unspecified type slots are wildcards only where allowed") {
  GrInstance gold = mk(Relation::kNcmod, {lex("poss"), lex("flag"), lex("red")});

  // Unspecified type in the prediction: wildcard under standard policy.
  GrInstance pred_wild = mk(Relation::kNcmod, {unspec(), lex("flag"), lex("red")});
  CHECK(!compatible(pred_wild, gold, MatchPolicy::kStrict));
  CHECK(compatible(pred_wild, gold, MatchPolicy::kStandard));
  CHECK(compatible(pred_wild, gold, MatchPolicy::kHierarchical));
  // ...but not the other way around: a concrete prediction does not match
  // a gold GR whose type differs.
  GrInstance gold_wild = mk(Relation::kNcmod, {unspec(), lex("flag"), lex("red")});
  GrInstance pred_conc = mk(Relation::kNcmod, {lex("of"), lex("flag"), lex("red")});
  CHECK(!compatible(pred_conc, gold_wild, MatchPolicy::kStandard));

  // The dependent slot is never relaxed by the standard policy.
  GrInstance pred_dep = mk(Relation::kNcmod, {lex("poss"), lex("flag"), unspec()});
  CHECK(!compatible(pred_dep, gold, MatchPolicy::kStandard));
  CHECK(compatible(pred_dep, gold, MatchPolicy::kHierarchical));

  // arg_mod keeps its type slot even under the standard policy.
  GrInstance gold_am = mk(Relation::kArgMod,
                          {lex("by"), lex("acquire"), lex("proprietor"),
                           igr(Relation::kSubj)});
  GrInstance pred_am = mk(Relation::kArgMod,
                          {unspec(), lex("acquire"), lex("proprietor"),
                           igr(Relation::kSubj)});
  CHECK(!compatible(pred_am, gold_am, MatchPolicy::kStandard));
  CHECK(compatible(pred_am, gold_am, MatchPolicy::kHierarchical));
}

TEST_CASE("initial gr slot stays exact under the standard policy") {
  GrInstance gold_igr =
      mk(Relation::kNcsubj, {lex("acquire"), lex("it"), igr(Relation::kObj)});
  GrInstance pred_igr =
      mk(Relation::kNcsubj, {lex("acquire"), lex("it"), igr(Relation::kObj)});
  GrInstance pred_other =
      mk(Relation::kNcsubj, {lex("acquire"), lex("it"), igr(Relation::kDobj)});
  GrInstance pred_none =
      mk(Relation::kNcsubj, {lex("acquire"), lex("it"), unspec()});

  CHECK(compatible(pred_igr, gold_igr, MatchPolicy::kStrict));
  CHECK(!compatible(pred_other, gold_igr, MatchPolicy::kStandard));
  CHECK(!compatible(pred_none, gold_igr, MatchPolicy::kStandard));
  // The hierarchical policy treats any unspecified prediction slot as a
  // wildcard, including initial grs.
  CHECK(compatible(pred_none, gold_igr, MatchPolicy::kHierarchical));
  CHECK(!compatible(pred_other, gold_igr, MatchPolicy::kHierarchical));

  // A gold GR that records an initial gr cannot be matched by a prediction
  // whose relation lacks the slot entirely.
  GrInstance pred_arg = mk(Relation::kArg, {lex("acquire"), lex("it")});
  CHECK(!compatible(pred_arg, gold_igr, MatchPolicy::kHierarchical));
  GrInstance gold_plain =
      mk(Relation::kNcsubj, {lex("acquire"), lex("it"), unspec()});
  CHECK(compatible(pred_arg, gold_plain, MatchPolicy::kHierarchical));
}

TEST_CASE("compatibility is reflexive, strict-symmetric, and monotone") {
  std::mt19937 rng(20260823);
  for (int trial = 0; trial < 500; ++trial) {
    GrInstance a = testing::random_gr(rng, 2);
    GrInstance b = testing::random_gr(rng, 2);
    for (MatchPolicy p : kPolicies) {
      CAPTURE(to_string(a));
      CAPTURE(static_cast<int>(p));
      CHECK(compatible(a, a, p));
    }
    CHECK(compatible(a, b, MatchPolicy::kStrict) ==
          compatible(b, a, MatchPolicy::kStrict));
    if (compatible(a, b, MatchPolicy::kStrict)) {
      CHECK(compatible(a, b, MatchPolicy::kStandard));
    }
    if (compatible(a, b, MatchPolicy::kStandard)) {
      CHECK(compatible(a, b, MatchPolicy::kHierarchical));
    }
  }
}

TEST_CASE("strict_equal agrees with the strict policy") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    GrInstance a = testing::random_gr(rng, 2);
    GrInstance b = testing::random_gr(rng, 2);
    CHECK(strict_equal(a, b) == compatible(a, b, MatchPolicy::kStrict));
  }
}

// ---------------------------------------------------------------------------
// Alignment.
// ---------------------------------------------------------------------------

void check_against_oracle(const std::vector<GrInstance>& pred,
                          const std::vector<GrInstance>& gold,
                          MatchPolicy policy) {
  testing::OracleResult want = testing::oracle_align(pred, gold, policy);
  std::vector<AlignedPair> got = align_sentence(pred, gold, policy);
  REQUIRE(got.size() == want.pairs.size());
  for (size_t i = 0; i < got.size(); ++i) {
    CHECK(got[i].gold_index == want.pairs[i].first);
    CHECK(got[i].pred_index == want.pairs[i].second);
    CHECK(got[i].exact ==
          strict_equal(pred[got[i].pred_index], gold[got[i].gold_index]));
  }
}

TEST_CASE("alignment matches exhaustive search on random sentences") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<GrInstance> gold = testing::random_sentence(rng, 6, 2);
    std::vector<GrInstance> pred = testing::random_sentence(rng, 3, 2);
    // Seed the prediction with exact and generalized copies of gold GRs so
    // the edge structure is dense enough to exercise the tie-breaking.
    for (const GrInstance& g : gold) {
      if (pred.size() >= 6) break;
      int k = testing::pick(rng, 4);
      if (k == 0) {
        pred.push_back(g);
      } else if (k == 1) {
        pred.push_back(testing::generalize_gr(rng, g));
      }
    }
    std::shuffle(pred.begin(), pred.end(), rng);
    MatchPolicy policy = kPolicies[trial % 3];
    CAPTURE(trial);
    check_against_oracle(pred, gold, policy);
  }
}

TEST_CASE("alignment handles degenerate and duplicate inputs") {
  std::vector<GrInstance> empty;
  GrInstance a = mk(Relation::kNcsubj, {lex("die"), lex("proprietor"), unspec()});
  std::vector<GrInstance> one{a};
  std::vector<GrInstance> two{a, a};

  for (MatchPolicy p : kPolicies) {
    CHECK(align_sentence(empty, empty, p).empty());
    CHECK(align_sentence(empty, one, p).empty());
    CHECK(align_sentence(one, empty, p).empty());

    // Duplicates pair off in index order.
    std::vector<AlignedPair> both = align_sentence(two, two, p);
    REQUIRE(both.size() == 2);
    CHECK(both[0].gold_index == 0);
    CHECK(both[0].pred_index == 0);
    CHECK(both[1].gold_index == 1);
    CHECK(both[1].pred_index == 1);
    CHECK(both[0].exact);
    CHECK(both[1].exact);

    std::vector<AlignedPair> surplus_pred = align_sentence(two, one, p);
    REQUIRE(surplus_pred.size() == 1);
    CHECK(surplus_pred[0].gold_index == 0);
    CHECK(surplus_pred[0].pred_index == 0);

    std::vector<AlignedPair> surplus_gold = align_sentence(one, two, p);
    REQUIRE(surplus_gold.size() == 1);
    CHECK(surplus_gold[0].gold_index == 0);
    CHECK(surplus_gold[0].pred_index == 0);
  }
}

TEST_CASE("exact matches win over merely compatible ones") {
  GrInstance gold_nc =
      mk(Relation::kNcsubj, {lex("die"), lex("proprietor"), unspec()});
  GrInstance pred_subj =
      mk(Relation::kSubj, {lex("die"), lex("proprietor"), unspec()});
  GrInstance pred_nc = gold_nc;

  // Both predictions are standard-compatible with the single gold GR; the
  // exact one must be chosen regardless of its position.
  std::vector<GrInstance> preds{pred_subj, pred_nc};
  std::vector<GrInstance> golds{gold_nc};
  std::vector<AlignedPair> got =
      align_sentence(preds, golds, MatchPolicy::kStandard);
  REQUIRE(got.size() == 1);
  CHECK(got[0].gold_index == 0);
  CHECK(got[0].pred_index == 1);
  CHECK(got[0].exact);

  std::vector<GrInstance> preds_rev{pred_nc, pred_subj};
  got = align_sentence(preds_rev, golds, MatchPolicy::kStandard);
  REQUIRE(got.size() == 1);
  CHECK(got[0].pred_index == 0);
  CHECK(got[0].exact);

  // Symmetrically, with one prediction and two golds the exact gold wins
  // even though the compatible one has the lower index.
  GrInstance gold_general =
      mk(Relation::kSubj, {lex("die"), lex("proprietor"), unspec()});
  std::vector<GrInstance> one_pred{pred_subj};
  std::vector<GrInstance> two_golds{gold_nc, gold_general};
  got = align_sentence(one_pred, two_golds, MatchPolicy::kStandard);
  REQUIRE(got.size() == 1);
  CHECK(got[0].gold_index == 1);
  CHECK(got[0].exact);
}

TEST_CASE("cardinality dominates exactness") {
  // Pairing pred 0 with its exact gold would strand pred 1, whose only
  // compatible gold is that same subj GR. The aligner must give up the
  // exact pair to reach the two-pair matching.
  GrInstance gold_subj = mk(Relation::kSubj, {lex("die"), lex("it"), unspec()});
  GrInstance gold_igr =
      mk(Relation::kNcsubj, {lex("die"), lex("it"), igr(Relation::kObj)});
  GrInstance pred_subj = gold_subj;  // exact for gold 0; hier-compatible
                                     // with gold 1 (wildcard initial gr)
  GrInstance pred_arg = mk(Relation::kArg, {lex("die"), lex("it")});
  // pred_arg lacks an initial-gr slot, so gold_igr's recorded initial gr
  // rules it out; gold_subj is its only partner.
  REQUIRE(compatible(pred_subj, gold_igr, MatchPolicy::kHierarchical));
  REQUIRE(!compatible(pred_arg, gold_igr, MatchPolicy::kHierarchical));
  REQUIRE(compatible(pred_arg, gold_subj, MatchPolicy::kHierarchical));

  std::vector<GrInstance> preds{pred_subj, pred_arg};
  std::vector<GrInstance> golds{gold_subj, gold_igr};
  std::vector<AlignedPair> got =
      align_sentence(preds, golds, MatchPolicy::kHierarchical);
  REQUIRE(got.size() == 2);
  CHECK(got[0].gold_index == 0);
  CHECK(got[0].pred_index == 1);
  CHECK(!got[0].exact);
  CHECK(got[1].gold_index == 1);
  CHECK(got[1].pred_index == 0);
  CHECK(!got[1].exact);

  // With an extra copy of the subj prediction the exact pair fits again
  // and must be restored.
  std::vector<GrInstance> preds3{pred_subj, pred_arg, pred_subj};
  got = align_sentence(preds3, golds, MatchPolicy::kHierarchical);
  REQUIRE(got.size() == 2);
  CHECK(got[0].gold_index == 0);
  CHECK(got[0].pred_index == 0);
  CHECK(got[0].exact);
  CHECK(got[1].gold_index == 1);
  CHECK(got[1].pred_index == 2);
  CHECK(!got[1].exact);
}

TEST_CASE("ties break toward the lexicographically least pair list") {
  GrInstance gold0 = mk(Relation::kNcsubj, {lex("die"), lex("it"), unspec()});
  GrInstance gold1 = mk(Relation::kXsubj, {lex("die"), lex("it"), unspec()});
  GrInstance pred = mk(Relation::kSubj, {lex("die"), lex("it"), unspec()});

  // pred is equally (non-exactly) compatible with both golds; the earlier
  // gold index must win.
  std::vector<GrInstance> one_pred{pred};
  std::vector<GrInstance> golds{gold0, gold1};
  std::vector<AlignedPair> got =
      align_sentence(one_pred, golds, MatchPolicy::kStandard);
  REQUIRE(got.size() == 1);
  CHECK(got[0].gold_index == 0);
  CHECK(got[0].pred_index == 0);

  // Two identical predictions: the earlier pred index pairs first.
  std::vector<GrInstance> two_preds{pred, pred};
  std::vector<AlignedPair> got2 =
      align_sentence(two_preds, golds, MatchPolicy::kStandard);
  REQUIRE(got2.size() == 2);
  CHECK(got2[0].gold_index == 0);
  CHECK(got2[0].pred_index == 0);
  CHECK(got2[1].gold_index == 1);
  CHECK(got2[1].pred_index == 1);
}

TEST_CASE("alignment size and exact count are permutation invariant") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<GrInstance> gold = testing::random_sentence(rng, 8, 2);
    std::vector<GrInstance> pred = testing::random_sentence(rng, 4, 2);
    for (const GrInstance& g : gold) {
      if (pred.size() >= 8) break;
      if (testing::pick(rng, 2) == 0) {
        pred.push_back(testing::pick(rng, 2) == 0
                           ? g
                           : testing::generalize_gr(rng, g));
      }
    }
    MatchPolicy policy = kPolicies[trial % 3];
    std::vector<AlignedPair> base = align_sentence(pred, gold, policy);

    std::vector<GrInstance> pred2 = pred;
    std::vector<GrInstance> gold2 = gold;
    std::shuffle(pred2.begin(), pred2.end(), rng);
    std::shuffle(gold2.begin(), gold2.end(), rng);
    std::vector<AlignedPair> shuffled = align_sentence(pred2, gold2, policy);

    CHECK(shuffled.size() == base.size());
    auto exact_count = [](const std::vector<AlignedPair>& v) {
      return std::count_if(v.begin(), v.end(),
                           [](const AlignedPair& p) { return p.exact; });
    };
    CHECK(exact_count(shuffled) == exact_count(base));
  }
}

TEST_CASE("alignment cardinality grows with policy leniency") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<GrInstance> gold = testing::random_sentence(rng, 7, 2);
    std::vector<GrInstance> pred = testing::random_sentence(rng, 4, 2);
    for (const GrInstance& g : gold) {
      if (pred.size() >= 7) break;
      if (testing::pick(rng, 3) == 0) {
        pred.push_back(testing::generalize_gr(rng, g));
      }
    }
    size_t strict = align_sentence(pred, gold, MatchPolicy::kStrict).size();
    size_t standard = align_sentence(pred, gold, MatchPolicy::kStandard).size();
    size_t hier =
        align_sentence(pred, gold, MatchPolicy::kHierarchical).size();
    CHECK(strict <= standard);
    CHECK(standard <= hier);
  }
}

TEST_CASE("alignment is deterministic and well-formed") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<GrInstance> gold = testing::random_sentence(rng, 8, 2);
    std::vector<GrInstance> pred = testing::random_sentence(rng, 8, 2);
    MatchPolicy policy = kPolicies[trial % 3];
    std::vector<AlignedPair> first = align_sentence(pred, gold, policy);
    std::vector<AlignedPair> second = align_sentence(pred, gold, policy);
    REQUIRE(first.size() == second.size());

    std::vector<char> pred_used(pred.size(), 0);
    int last_gold = -1;
    for (size_t i = 0; i < first.size(); ++i) {
      CHECK(first[i].pred_index == second[i].pred_index);
      CHECK(first[i].gold_index == second[i].gold_index);
      CHECK(first[i].exact == second[i].exact);

      REQUIRE(first[i].gold_index > last_gold);  // sorted, no duplicates
      last_gold = first[i].gold_index;
      REQUIRE(first[i].pred_index >= 0);
      REQUIRE(first[i].pred_index < static_cast<int>(pred.size()));
      CHECK(!pred_used[first[i].pred_index]);
      pred_used[first[i].pred_index] = 1;
      CHECK(compatible(pred[first[i].pred_index], gold[first[i].gold_index],
                       policy));
    }
  }
}

TEST_CASE("aligning the worked sentence pair") {
  auto load = [](const char* path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    ParseResult r = parse_corpus(in);
    REQUIRE(r.ok());
    REQUIRE(r.corpus->sentences.size() == 1);
    return r.corpus->sentences[0].grs;
  };
  std::vector<GrInstance> gold = load(GREVAL_DATA_DIR "/mini.gr");
  std::vector<GrInstance> pred = load(GREVAL_DATA_DIR "/mini-pred.gr");
  REQUIRE(gold.size() == 12);
  REQUIRE(pred.size() == 11);

  // Self-alignment is the identity and fully exact.
  for (MatchPolicy p : kPolicies) {
    std::vector<AlignedPair> self = align_sentence(gold, gold, p);
    REQUIRE(self.size() == 12);
    for (int i = 0; i < 12; ++i) {
      CHECK(self[i].gold_index == i);
      CHECK(self[i].pred_index == i);
      CHECK(self[i].exact);
    }
  }

  // The prediction drops ncsubj(drop, government, _) and mislabels
  // dobj(drop, it, _) as iobj(_, drop, it): ten GRs remain and they match
  // exactly under every policy.
  for (MatchPolicy p : kPolicies) {
    std::vector<AlignedPair> got = align_sentence(pred, gold, p);
    REQUIRE(got.size() == 10);
    for (int i = 0; i < 10; ++i) {
      CHECK(got[i].gold_index == i);
      CHECK(got[i].pred_index == i);
      CHECK(got[i].exact);
    }
    check_against_oracle(pred, gold, p);
  }
}

}  // namespace
}  // namespace greval
