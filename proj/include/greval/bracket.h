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
// Phrase-structure bracket scoring, used as the baseline the GR metrics
// are compared against. The .br text format holds one parenthesized tree
// per record:
//
//   (VP saw (NP the man) (PP with (NP a telescope)))
//   <blank line>
//
// Records are separated by blank lines and may span several lines; lines
// beginning with `%` are comments. A node is `(<label> <child>...)` with
// at least one child; children are nodes or bare leaf tokens. Leaf
// tokens compare exactly (no case folding).

#ifndef GREVAL_BRACKET_H_
#define GREVAL_BRACKET_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "greval/corpus.h"

namespace greval {

struct Bracket {
  std::string label;
  int start = 0;  // token span [start, end), 0-based
  int end = 0;

  bool operator==(const Bracket&) const = default;
};

struct BracketSentence {
  std::vector<std::string> tokens;
  std::vector<Bracket> brackets;  // preorder: parents before children
};

// Parsing is total: any input yields either the sentence list or error
// diagnostics with line numbers, never an exception.
struct BracketParseResult {
  std::optional<std::vector<BracketSentence>> sentences;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return sentences.has_value(); }
};

BracketParseResult parse_brackets(std::istream& in);
BracketParseResult parse_brackets_string(std::string_view text);

struct BracketOptions {
  bool labelled = false;    // compare labels as well as spans
  bool drop_unary = false;  // keep only the outermost bracket of each
                            // chain spanning identical tokens
  bool drop_root = false;   // ignore the tree's outermost bracket
};

struct BracketCounts {
  int64_t matched = 0;
  int64_t predicted = 0;
  int64_t gold = 0;
};

// Multiset intersection of the two bracket lists after applying
// `options` to both sides. Throws std::invalid_argument when the two
// sentences tokenize differently.
BracketCounts bracket_counts(const BracketSentence& pred,
                             const BracketSentence& gold,
                             const BracketOptions& options);

// Number of distinct predicted spans that overlap some gold span
// without either containing the other. Independent of labels and of
// BracketOptions. Throws std::invalid_argument when the two sentences
// tokenize differently.
int crossing_brackets(const BracketSentence& pred,
                      const BracketSentence& gold);

struct BracketScore {
  int64_t matched = 0;
  int64_t predicted = 0;
  int64_t gold = 0;
  double precision = 0.0;  // matched / predicted, 0 when predicted == 0
  double recall = 0.0;     // matched / gold, 0 when gold == 0
  double f_score = 0.0;    // harmonic mean of the two
  int64_t crossings = 0;
  double mean_crossings = 0.0;  // crossings / sentences, 0 when empty
};

// Micro-aggregated bracket scores over order-paired sentence lists.
// Throws std::invalid_argument when the lists have different lengths or
// a pair tokenizes differently (the message names the 1-based record).
BracketScore score_bracket_corpus(const std::vector<BracketSentence>& pred,
                                  const std::vector<BracketSentence>& gold,
                                  const BracketOptions& options);

}  // namespace greval

#endif  // GREVAL_BRACKET_H_
