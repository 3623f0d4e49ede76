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

#include "greval/stats.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace greval {

FrequencyTable relation_frequencies(const Corpus& corpus) {
  std::array<int64_t, static_cast<size_t>(kRelationCount)> exact{};
  for (const Sentence& sentence : corpus.sentences) {
    for (const GrInstance& gr : sentence.grs) {
      ++exact[static_cast<size_t>(gr.relation())];
    }
  }

  FrequencyTable table;
  for (size_t i = 0; i < table.rows.size(); ++i) {
    FrequencyRow& row = table.rows[i];
    row.relation = static_cast<Relation>(i);
    uint32_t mask = cone_mask(row.relation);
    row.count = 0;
    for (Relation member : all_relations()) {
      if (mask & relation_bit(member)) {
        row.count += exact[static_cast<size_t>(member)];
      }
    }
  }
  table.total = table.rows[static_cast<size_t>(Relation::kDependent)].count;
  for (FrequencyRow& row : table.rows) {
    row.percent = table.total > 0
                      ? 100.0 * static_cast<double>(row.count) /
                            static_cast<double>(table.total)
                      : 0.0;
  }
  return table;
}

double mean_grs_per_sentence(const Corpus& corpus) {
  if (corpus.sentences.empty()) {
    throw std::invalid_argument("mean_grs_per_sentence: empty corpus");
  }
  return static_cast<double>(corpus.total_grs()) /
         static_cast<double>(corpus.sentences.size());
}

Contingency genre_contingency(const Corpus& corpus) {
  static const char kGenreOrder[] = {'A', 'G', 'J'};
  std::array<bool, 3> present{};
  for (const Sentence& sentence : corpus.sentences) {
    if (!sentence.genre.has_value()) continue;
    for (size_t g = 0; g < 3; ++g) {
      if (*sentence.genre == kGenreOrder[g]) present[g] = true;
    }
  }

  Contingency table;
  for (size_t g = 0; g < 3; ++g) {
    if (present[g]) table.genres.push_back(kGenreOrder[g]);
  }
  if (table.genres.size() < 2) {
    throw std::invalid_argument(
        "genre test requires at least two genres in the corpus");
  }

  for (Relation r : all_relations()) {
    table.row_labels.emplace_back(relation_name(r));
  }
  table.cells.assign(table.row_labels.size(),
                     std::vector<int64_t>(table.genres.size(), 0));
  for (const Sentence& sentence : corpus.sentences) {
    if (!sentence.genre.has_value()) continue;
    size_t col = std::find(table.genres.begin(), table.genres.end(),
                           *sentence.genre) -
                 table.genres.begin();
    for (const GrInstance& gr : sentence.grs) {
      ++table.cells[static_cast<size_t>(gr.relation())][col];
    }
  }
  return table;
}

namespace {

std::vector<int64_t> row_totals(const Contingency& t) {
  std::vector<int64_t> out(t.cells.size(), 0);
  for (size_t i = 0; i < t.cells.size(); ++i) {
    for (int64_t cell : t.cells[i]) out[i] += cell;
  }
  return out;
}

std::vector<int64_t> column_totals(const Contingency& t) {
  std::vector<int64_t> out(t.genres.size(), 0);
  for (const auto& row : t.cells) {
    for (size_t j = 0; j < row.size(); ++j) out[j] += row[j];
  }
  return out;
}

int64_t table_total(const Contingency& t) {
  int64_t total = 0;
  for (const auto& row : t.cells) {
    for (int64_t cell : row) total += cell;
  }
  return total;
}

// Smallest expected count in the table, or +inf for an empty table.
double min_expected(const Contingency& t) {
  std::vector<int64_t> rows = row_totals(t);
  std::vector<int64_t> cols = column_totals(t);
  double total = static_cast<double>(table_total(t));
  double min_e = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < t.cells.size(); ++i) {
    for (size_t j = 0; j < t.genres.size(); ++j) {
      double e = static_cast<double>(rows[i]) *
                 static_cast<double>(cols[j]) / total;
      min_e = std::min(min_e, e);
    }
  }
  return min_e;
}

}  // namespace

Contingency pool_low_expected(const Contingency& table) {
  Contingency out;
  out.genres = table.genres;

  // Drop all-zero columns, then all-zero rows.
  std::vector<int64_t> cols = column_totals(table);
  std::vector<size_t> live_cols;
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] > 0) live_cols.push_back(j);
  }
  if (live_cols.size() < 2) {
    throw std::invalid_argument(
        "genre test requires at least two genres with annotated GRs");
  }
  out.genres.clear();
  for (size_t j : live_cols) out.genres.push_back(table.genres[j]);
  for (size_t i = 0; i < table.cells.size(); ++i) {
    std::vector<int64_t> row;
    int64_t total = 0;
    for (size_t j : live_cols) {
      row.push_back(table.cells[i][j]);
      total += table.cells[i][j];
    }
    if (total > 0) {
      out.row_labels.push_back(table.row_labels[i]);
      out.cells.push_back(std::move(row));
    }
  }

  // Merge the rarest rows into "other" until every expected count is at
  // least 5. Ties on the row total break toward the later row so the
  // most specific (deepest-listed) relation is absorbed first.
  while (out.cells.size() >= 2 && min_expected(out) < 5.0) {
    std::vector<int64_t> totals = row_totals(out);
    size_t victim = out.cells.size();
    int64_t best = std::numeric_limits<int64_t>::max();
    for (size_t i = 0; i < out.cells.size(); ++i) {
      if (out.row_labels[i] == "other") continue;
      if (totals[i] <= best) {
        best = totals[i];
        victim = i;
      }
    }
    if (victim == out.cells.size()) break;  // only "other" left

    size_t other = out.row_labels.size();
    for (size_t i = 0; i < out.row_labels.size(); ++i) {
      if (out.row_labels[i] == "other") other = i;
    }
    if (other == out.row_labels.size()) {
      // Victim becomes the seed of the "other" row, moved to the end.
      std::vector<int64_t> seed = std::move(out.cells[victim]);
      out.cells.erase(out.cells.begin() + victim);
      out.row_labels.erase(out.row_labels.begin() + victim);
      out.row_labels.push_back("other");
      out.cells.push_back(std::move(seed));
    } else {
      for (size_t j = 0; j < out.genres.size(); ++j) {
        out.cells[other][j] += out.cells[victim][j];
      }
      out.cells.erase(out.cells.begin() + victim);
      out.row_labels.erase(out.row_labels.begin() + victim);
    }
  }

  if (out.cells.size() < 2) {
    throw std::invalid_argument(
        "genre test is degenerate after pooling low-frequency relations");
  }
  return out;
}

ChiSquareResult chi_square_homogeneity(const Contingency& table) {
  if (table.cells.size() < 2 || table.genres.size() < 2) {
    throw std::invalid_argument(
        "chi-square test requires at least a 2x2 table");
  }
  std::vector<int64_t> rows = row_totals(table);
  std::vector<int64_t> cols = column_totals(table);
  for (int64_t r : rows) {
    if (r <= 0) {
      throw std::invalid_argument("chi-square table has an empty row");
    }
  }
  for (int64_t c : cols) {
    if (c <= 0) {
      throw std::invalid_argument("chi-square table has an empty column");
    }
  }

  double total = static_cast<double>(table_total(table));
  ChiSquareResult result;
  for (size_t i = 0; i < table.cells.size(); ++i) {
    for (size_t j = 0; j < table.genres.size(); ++j) {
      double expected = static_cast<double>(rows[i]) *
                        static_cast<double>(cols[j]) / total;
      double diff = static_cast<double>(table.cells[i][j]) - expected;
      result.statistic += diff * diff / expected;
    }
  }
  result.degrees_of_freedom = static_cast<int>(table.cells.size() - 1) *
                              static_cast<int>(table.genres.size() - 1);
  result.p_value = regularized_gamma_q(result.degrees_of_freedom / 2.0,
                                       result.statistic / 2.0);
  return result;
}

ChiSquareResult genre_chi_square(const Corpus& corpus) {
  return chi_square_homogeneity(pool_low_expected(genre_contingency(corpus)));
}

namespace {

constexpr int kMaxIterations = 1000;
constexpr double kEpsilon = 1e-15;

// Lower-tail series: P(a, x) = x^a e^-x / Gamma(a) * sum_n x^n /
// (a (a+1) ... (a+n)); converges quickly for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int n = 0; n < kMaxIterations; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEpsilon) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper-tail continued fraction (modified Lentz); converges quickly for
// x >= a + 1.
double gamma_q_continued_fraction(double a, double x) {
  constexpr double kTiny = std::numeric_limits<double>::min() / kEpsilon;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIterations; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEpsilon) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) {
    throw std::invalid_argument(
        "regularized_gamma_q requires a > 0 and x >= 0");
  }
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_continued_fraction(a, x);
}

}  // namespace greval
