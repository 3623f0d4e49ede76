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
// Corpus-level statistics: cone-inclusive relation frequencies, mean GRs
// per sentence, and a Pearson chi-square homogeneity test of the
// exact-level relation distribution across genres.

#ifndef GREVAL_STATS_H_
#define GREVAL_STATS_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "greval/corpus.h"
#include "greval/relation.h"

namespace greval {

struct FrequencyRow {
  Relation relation = Relation::kDependent;
  int64_t count = 0;      // GRs whose relation lies in this row's cone
  double percent = 0.0;   // count / total * 100, full precision; 0 when
                          // the corpus is empty
};

struct FrequencyTable {
  std::array<FrequencyRow, static_cast<size_t>(kRelationCount)> rows;
  int64_t total = 0;  // all GR instances; equals the dependent row count
};

// Cone-inclusive relation frequencies. An empty corpus yields all-zero
// counts and percents; callers that want to warn on that case can test
// `total == 0`.
FrequencyTable relation_frequencies(const Corpus& corpus);

// Total GR instances divided by sentence count, full precision.
// Throws std::invalid_argument on an empty corpus.
double mean_grs_per_sentence(const Corpus& corpus);

// Exact-level relation counts split by genre. Rows follow hierarchy
// order (all relations, including empty ones); columns are the genres
// present in the corpus, in A, G, J order. Sentences without a genre
// annotation are excluded. Throws std::invalid_argument when fewer than
// two genres are present.
struct Contingency {
  std::vector<std::string> row_labels;
  std::vector<char> genres;
  std::vector<std::vector<int64_t>> cells;  // row-major, rows x genres
};

Contingency genre_contingency(const Corpus& corpus);

// Prepares a contingency table for the chi-square test: drops all-zero
// rows and columns, then repeatedly merges the lowest-total surviving
// row into a trailing "other" row until every expected count reaches 5
// (ties broken toward the later row; "other" itself is never a merge
// victim). Throws std::invalid_argument when fewer than two rows or
// columns survive.
Contingency pool_low_expected(const Contingency& table);

struct ChiSquareResult {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
};

// Pearson chi-square test of homogeneity on an explicit table. The
// caller is responsible for pooling; every row and column must have a
// positive total (throws std::invalid_argument otherwise).
ChiSquareResult chi_square_homogeneity(const Contingency& table);

// genre_contingency + pool_low_expected + chi_square_homogeneity.
ChiSquareResult genre_chi_square(const Corpus& corpus);

// Upper tail of the regularized incomplete gamma function Q(a, x) for
// a > 0, x >= 0, with relative error <= 1e-8. The chi-square upper-tail
// probability with d degrees of freedom at statistic s is Q(d/2, s/2).
double regularized_gamma_q(double a, double x);

}  // namespace greval

#endif  // GREVAL_STATS_H_
