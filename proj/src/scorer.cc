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

#include "greval/scorer.h"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace greval {

double f_score(double precision, double recall) {
  double sum = precision + recall;
  if (sum == 0.0) return 0.0;
  return 2.0 * precision * recall / sum;
}

bool zero_denominator(const PrfRow& row) {
  return row.predicted_count == 0 || row.gold_count == 0;
}

namespace {

// Exact-level tallies, indexed by relation ordinal; cone aggregation
// happens once at the end.
struct RawCounts {
  std::array<int64_t, static_cast<size_t>(kRelationCount)> predicted{};
  std::array<int64_t, static_cast<size_t>(kRelationCount)> gold{};
  std::array<int64_t, static_cast<size_t>(kRelationCount)> matched_predicted{};
  std::array<int64_t, static_cast<size_t>(kRelationCount)> matched_gold{};
};

size_t ord(Relation r) { return static_cast<size_t>(r); }

// Tallies one sentence; either side may be absent (unpaired id).
void tally_sentence(const std::vector<GrInstance>* pred,
                    const std::vector<GrInstance>* gold, MatchPolicy policy,
                    RawCounts* counts) {
  if (pred != nullptr) {
    for (const GrInstance& gr : *pred) ++counts->predicted[ord(gr.relation())];
  }
  if (gold != nullptr) {
    for (const GrInstance& gr : *gold) ++counts->gold[ord(gr.relation())];
  }
  if (pred != nullptr && gold != nullptr) {
    for (const AlignedPair& pair : align_sentence(*pred, *gold, policy)) {
      ++counts->matched_predicted[ord((*pred)[pair.pred_index].relation())];
      ++counts->matched_gold[ord((*gold)[pair.gold_index].relation())];
    }
  }
}

int64_t cone_sum(
    const std::array<int64_t, static_cast<size_t>(kRelationCount)>& raw,
    Relation r) {
  int64_t total = 0;
  uint32_t mask = cone_mask(r);
  for (Relation member : all_relations()) {
    if (mask & relation_bit(member)) total += raw[ord(member)];
  }
  return total;
}

double ratio(int64_t numerator, int64_t denominator) {
  if (denominator == 0) return 0.0;
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

std::string ratio_6dp(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

}  // namespace

ScoreResult score_corpus(const Corpus& pred, const Corpus& gold,
                         MatchPolicy policy) {
  ScoreResult result;
  RawCounts counts;

  for (const Sentence& gs : gold.sentences) {
    const Sentence* ps = pred.find(gs.id);
    if (ps == nullptr) {
      result.warnings.push_back(
          {Diagnostic::Severity::kWarning, gs.header_line,
           "sentence id '" + gs.id + "' present only in gold corpus"});
    }
    tally_sentence(ps != nullptr ? &ps->grs : nullptr, &gs.grs, policy,
                   &counts);
  }
  for (const Sentence& ps : pred.sentences) {
    if (gold.find(ps.id) != nullptr) continue;
    result.warnings.push_back(
        {Diagnostic::Severity::kWarning, ps.header_line,
         "sentence id '" + ps.id + "' present only in predicted corpus"});
    tally_sentence(&ps.grs, nullptr, policy, &counts);
  }

  for (size_t i = 0; i < result.table.rows.size(); ++i) {
    PrfRow& row = result.table.rows[i];
    row.relation = static_cast<Relation>(i);
    row.predicted_count = cone_sum(counts.predicted, row.relation);
    row.gold_count = cone_sum(counts.gold, row.relation);
    row.matched_predicted = cone_sum(counts.matched_predicted, row.relation);
    row.matched_gold = cone_sum(counts.matched_gold, row.relation);
    row.precision = ratio(row.matched_predicted, row.predicted_count);
    row.recall = ratio(row.matched_gold, row.gold_count);
    row.f_score = f_score(row.precision, row.recall);
  }
  return result;
}

std::vector<SentenceScore> per_sentence_scores(const Corpus& pred,
                                               const Corpus& gold,
                                               MatchPolicy policy) {
  std::vector<SentenceScore> out;
  auto push = [&](const std::string& id, const std::vector<GrInstance>* p,
                  const std::vector<GrInstance>* g) {
    SentenceScore row;
    row.id = id;
    row.predicted = p != nullptr ? static_cast<int64_t>(p->size()) : 0;
    row.gold = g != nullptr ? static_cast<int64_t>(g->size()) : 0;
    if (p != nullptr && g != nullptr) {
      row.matched = static_cast<int64_t>(align_sentence(*p, *g, policy).size());
    }
    row.precision = ratio(row.matched, row.predicted);
    row.recall = ratio(row.matched, row.gold);
    row.f_score = f_score(row.precision, row.recall);
    out.push_back(std::move(row));
  };

  for (const Sentence& gs : gold.sentences) {
    const Sentence* ps = pred.find(gs.id);
    push(gs.id, ps != nullptr ? &ps->grs : nullptr, &gs.grs);
  }
  for (const Sentence& ps : pred.sentences) {
    if (gold.find(ps.id) != nullptr) continue;
    push(ps.id, &ps.grs, nullptr);
  }
  return out;
}

std::string render_per_sentence_csv(const std::vector<SentenceScore>& rows) {
  std::ostringstream out;
  out << "sentence,predicted,gold,matched,precision,recall,f_score\n";
  for (const SentenceScore& row : rows) {
    out << csv_field(row.id) << ',' << row.predicted << ',' << row.gold << ','
        << row.matched << ',' << ratio_6dp(row.precision) << ','
        << ratio_6dp(row.recall) << ',' << ratio_6dp(row.f_score) << '\n';
  }
  return out.str();
}

std::string render_score_table(const ScoreTable& table, ReportFormat format,
                               std::string_view policy) {
  switch (format) {
    case ReportFormat::kText: {
      std::ostringstream out;
      char buf[160];
      std::snprintf(buf, sizeof buf, "%-20s%10s%10s%10s", "relation",
                    "precision", "recall", "f-score");
      out << buf << '\n';
      bool any_flagged = false;
      for (const PrfRow& row : table.rows) {
        std::string name(2 * hierarchy_depth(row.relation), ' ');
        name += relation_name(row.relation);
        std::snprintf(buf, sizeof buf, "%-20s%10s%10s%10s", name.c_str(),
                      percent_1dp(100.0 * row.precision).c_str(),
                      percent_1dp(100.0 * row.recall).c_str(),
                      percent_1dp(100.0 * row.f_score).c_str());
        out << buf;
        if (zero_denominator(row)) {
          out << "  *";
          any_flagged = true;
        }
        out << '\n';
      }
      if (any_flagged) {
        out << "\n* zero denominator: ratio reported as 0.0\n";
      }
      return out.str();
    }
    case ReportFormat::kCsv: {
      std::ostringstream out;
      out << "relation,predicted,gold,matched_predicted,matched_gold,"
             "precision,recall,f_score\n";
      for (const PrfRow& row : table.rows) {
        out << relation_name(row.relation) << ',' << row.predicted_count
            << ',' << row.gold_count << ',' << row.matched_predicted << ','
            << row.matched_gold << ',' << ratio_6dp(row.precision) << ','
            << ratio_6dp(row.recall) << ',' << ratio_6dp(row.f_score) << '\n';
      }
      return out.str();
    }
    case ReportFormat::kJson: {
      nlohmann::ordered_json doc;
      doc["schema"] = 1;
      doc["report"] = "evaluate";
      doc["policy"] = std::string(policy);
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const PrfRow& row : table.rows) {
        nlohmann::ordered_json r;
        r["relation"] = relation_name(row.relation);
        r["depth"] = hierarchy_depth(row.relation);
        r["predicted"] = row.predicted_count;
        r["gold"] = row.gold_count;
        r["matched_predicted"] = row.matched_predicted;
        r["matched_gold"] = row.matched_gold;
        r["precision"] = row.precision;
        r["recall"] = row.recall;
        r["f_score"] = row.f_score;
        r["zero_denominator"] = zero_denominator(row);
        rows.push_back(std::move(r));
      }
      doc["rows"] = std::move(rows);
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

}  // namespace greval
