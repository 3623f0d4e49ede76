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
//
// Inter-annotator agreement: mutual strict precision between two
// independent GR annotations of the same sentences, summarised as the
// harmonic mean of the two directed precisions.

#ifndef GREVAL_AGREEMENT_H_
#define GREVAL_AGREEMENT_H_

#include <cstdint>

#include "greval/corpus.h"
#include "greval/scorer.h"

namespace greval {

struct AgreementReport {
  int64_t total_a = 0;  // GR instances in the first annotation
  int64_t total_b = 0;  // GR instances in the second annotation
  int64_t matched = 0;  // strictly aligned pairs, summed over sentences

  // Fraction of each annotator's GRs that the other annotator also
  // produced; 0 by convention when the annotation is empty.
  double precision_a_given_b = 0.0;  // matched / total_a
  double precision_b_given_a = 0.0;  // matched / total_b

  double f_score = 0.0;  // harmonic mean of the two precisions

  // Per-relation cone breakdown, first annotation scored against the
  // second under the strict policy.
  ScoreTable breakdown;
};

// Computes agreement between two annotations of the same sentence set.
// Alignment is one-to-one per sentence under the strict policy, so the
// report is symmetric in the two corpora up to the a/b field labels.
// Throws std::invalid_argument when the corpora cover different
// sentence ids; the message lists the symmetric difference.
AgreementReport inter_annotator_agreement(const Corpus& a, const Corpus& b);

}  // namespace greval

#endif  // GREVAL_AGREEMENT_H_
