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

#include "greval/agreement.h"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "greval/matcher.h"

namespace greval {
namespace {

// Ids present in `left` but not in `right`, in corpus order.
std::vector<std::string> ids_missing_from(const Corpus& left,
                                          const Corpus& right) {
  std::vector<std::string> out;
  for (const Sentence& s : left.sentences) {
    if (right.find(s.id) == nullptr) out.push_back(s.id);
  }
  return out;
}

void append_id_list(std::ostringstream& os, const char* label,
                    const std::vector<std::string>& ids) {
  if (ids.empty()) return;
  os << "; " << label;
  for (size_t i = 0; i < ids.size(); ++i) {
    os << (i == 0 ? " " : ", ") << ids[i];
  }
}

}  // namespace

AgreementReport inter_annotator_agreement(const Corpus& a, const Corpus& b) {
  std::vector<std::string> only_a = ids_missing_from(a, b);
  std::vector<std::string> only_b = ids_missing_from(b, a);
  if (!only_a.empty() || !only_b.empty()) {
    std::ostringstream os;
    os << "annotator corpora cover different sentences";
    append_id_list(os, "only in first:", only_a);
    append_id_list(os, "only in second:", only_b);
    throw std::invalid_argument(os.str());
  }

  AgreementReport report;
  report.total_a = static_cast<int64_t>(a.total_grs());
  report.total_b = static_cast<int64_t>(b.total_grs());
  for (const Sentence& sa : a.sentences) {
    const Sentence* sb = b.find(sa.id);
    report.matched += static_cast<int64_t>(
        align_sentence(sa.grs, sb->grs, MatchPolicy::kStrict).size());
  }
  report.precision_a_given_b =
      report.total_a > 0 ? static_cast<double>(report.matched) /
                               static_cast<double>(report.total_a)
                         : 0.0;
  report.precision_b_given_a =
      report.total_b > 0 ? static_cast<double>(report.matched) /
                               static_cast<double>(report.total_b)
                         : 0.0;
  report.f_score =
      f_score(report.precision_a_given_b, report.precision_b_given_a);
  report.breakdown = score_corpus(a, b, MatchPolicy::kStrict).table;
  return report;
}

}  // namespace greval
