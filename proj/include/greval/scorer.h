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
// Per-relation precision / recall / F-score over the subsumption
// hierarchy. Counting is cone-inclusive: every GR contributes to its own
// relation's row and to the row of every relation that subsumes it, so
// the `dependent` row aggregates the whole corpus and parent rows equal
// the sum of their children plus GRs annotated at the parent itself.

#ifndef GREVAL_SCORER_H_
#define GREVAL_SCORER_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "greval/corpus.h"
#include "greval/matcher.h"
#include "greval/relation.h"
#include "greval/report.h"

namespace greval {

// Harmonic mean of precision and recall; 0 when both are 0.
double f_score(double precision, double recall);

struct PrfRow {
  Relation relation = Relation::kDependent;
  int64_t predicted_count = 0;
  int64_t gold_count = 0;
  int64_t matched_predicted = 0;
  int64_t matched_gold = 0;
  double precision = 0.0;  // matched_predicted / predicted_count, 0 if 0/0
  double recall = 0.0;     // matched_gold / gold_count, 0 if 0/0
  double f_score = 0.0;    // harmonic mean of the two
};

// True when the row's precision or recall had a zero denominator and was
// reported as 0.0 by convention. Rendered as a trailing '*' in text mode.
bool zero_denominator(const PrfRow& row);

struct ScoreTable {
  // One row per relation in report (hierarchy) order.
  std::array<PrfRow, static_cast<size_t>(kRelationCount)> rows;
};

struct ScoreResult {
  ScoreTable table;
  // Warnings for sentence ids present in only one corpus. Such sentences
  // still contribute their GRs as unmatched on the side where they exist.
  std::vector<Diagnostic> warnings;
};

// Scores `pred` against `gold`. Sentences are paired by id; alignment
// runs per sentence and counts are micro-aggregated (summed over the
// corpus before division).
ScoreResult score_corpus(const Corpus& pred, const Corpus& gold,
                         MatchPolicy policy);

// Sentence-level match counts, in gold corpus order followed by
// predicted-only sentences. Ratios use the whole-sentence (dependent
// level) counts.
struct SentenceScore {
  std::string id;
  int64_t predicted = 0;
  int64_t gold = 0;
  int64_t matched = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_score = 0.0;
};

std::vector<SentenceScore> per_sentence_scores(const Corpus& pred,
                                               const Corpus& gold,
                                               MatchPolicy policy);

std::string render_per_sentence_csv(const std::vector<SentenceScore>& rows);

// Renders the score table. Text mode lays the hierarchy out with
// two-space indentation and percentages to one decimal place; csv and
// json carry the raw counts plus the derived ratios. `policy` is embedded
// in the json report for self-description.
std::string render_score_table(const ScoreTable& table, ReportFormat format,
                               std::string_view policy);

}  // namespace greval

#endif  // GREVAL_SCORER_H_
