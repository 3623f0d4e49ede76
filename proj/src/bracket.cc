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

#include "greval/bracket.h"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "greval/scorer.h"

namespace greval {
namespace {

struct Token {
  std::string text;  // "(", ")", or a bare atom
  int line = 0;
};

void tokenize_line(const std::string& line, int line_number,
                   std::vector<Token>& out) {
  size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '(' || c == ')') {
      out.push_back({std::string(1, c), line_number});
      ++i;
    } else {
      size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
             line[j] != '\r' && line[j] != '(' && line[j] != ')') {
        ++j;
      }
      out.push_back({line.substr(i, j - i), line_number});
      i = j;
    }
  }
}

void error(std::vector<Diagnostic>& diagnostics, int line,
           std::string message) {
  diagnostics.push_back(
      {Diagnostic::Severity::kError, line, std::move(message)});
}

// Recursive descent over one record's token list. Returns false after
// recording a diagnostic. Brackets are appended at open time so the list
// comes out in preorder; spans are filled in on close.
bool parse_node(const std::vector<Token>& tokens, size_t& pos,
                BracketSentence& sentence,
                std::vector<Diagnostic>& diagnostics) {
  const Token& open = tokens[pos];
  ++pos;  // consume "("

  if (pos >= tokens.size() || tokens[pos].text == "(" ||
      tokens[pos].text == ")") {
    error(diagnostics, open.line, "constituent is missing a label");
    return false;
  }
  size_t index = sentence.brackets.size();
  sentence.brackets.push_back(
      {tokens[pos].text, static_cast<int>(sentence.tokens.size()), 0});
  ++pos;  // consume the label

  size_t children = 0;
  while (true) {
    if (pos >= tokens.size()) {
      error(diagnostics, open.line, "unbalanced parentheses: '(' never closed");
      return false;
    }
    const Token& t = tokens[pos];
    if (t.text == ")") {
      ++pos;
      break;
    }
    if (t.text == "(") {
      if (!parse_node(tokens, pos, sentence, diagnostics)) return false;
    } else {
      sentence.tokens.push_back(t.text);
      ++pos;
    }
    ++children;
  }
  if (children == 0) {
    error(diagnostics, open.line, "empty constituent");
    return false;
  }
  sentence.brackets[index].end = static_cast<int>(sentence.tokens.size());
  return true;
}

// Parses one blank-line-delimited record. Appends to `sentences` on
// success, to `diagnostics` on failure.
void parse_record(const std::vector<Token>& tokens,
                  std::vector<BracketSentence>& sentences,
                  std::vector<Diagnostic>& diagnostics) {
  if (tokens.empty()) return;
  if (tokens[0].text != "(") {
    error(diagnostics, tokens[0].line,
          "expected '(' at the start of a bracketed sentence");
    return;
  }
  BracketSentence sentence;
  size_t pos = 0;
  if (!parse_node(tokens, pos, sentence, diagnostics)) return;
  if (pos < tokens.size()) {
    error(diagnostics, tokens[pos].line,
          "trailing content after the bracketed sentence");
    return;
  }
  sentences.push_back(std::move(sentence));
}

bool is_blank(const std::string& line) {
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

}  // namespace

BracketParseResult parse_brackets(std::istream& in) {
  BracketParseResult result;
  std::vector<BracketSentence> sentences;
  std::vector<Token> record;

  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line[0] == '%') continue;
    if (is_blank(line)) {
      parse_record(record, sentences, result.diagnostics);
      record.clear();
      continue;
    }
    tokenize_line(line, line_number, record);
  }
  parse_record(record, sentences, result.diagnostics);

  if (!has_errors(result.diagnostics)) {
    result.sentences = std::move(sentences);
  }
  return result;
}

BracketParseResult parse_brackets_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_brackets(in);
}

namespace {

using BracketKey = std::tuple<std::string, int, int>;

// The comparable keys of a sentence's brackets under `options`, sorted.
std::vector<BracketKey> option_keys(const BracketSentence& sentence,
                                    const BracketOptions& options) {
  std::vector<Bracket> kept(sentence.brackets.begin(),
                            sentence.brackets.end());
  if (options.drop_root && !kept.empty()) {
    kept.erase(kept.begin());
  }
  if (options.drop_unary) {
    // Preorder lists the outer bracket of a same-span chain first, so
    // keeping the first occurrence of each span keeps the outermost.
    std::set<std::pair<int, int>> seen;
    std::vector<Bracket> outer;
    for (const Bracket& b : kept) {
      if (seen.insert({b.start, b.end}).second) outer.push_back(b);
    }
    kept = std::move(outer);
  }

  std::vector<BracketKey> keys;
  keys.reserve(kept.size());
  for (const Bracket& b : kept) {
    keys.emplace_back(options.labelled ? b.label : std::string(), b.start,
                      b.end);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

void require_same_tokens(const BracketSentence& pred,
                         const BracketSentence& gold) {
  if (pred.tokens != gold.tokens) {
    throw std::invalid_argument("bracketed sentences tokenize differently");
  }
}

}  // namespace

BracketCounts bracket_counts(const BracketSentence& pred,
                             const BracketSentence& gold,
                             const BracketOptions& options) {
  require_same_tokens(pred, gold);
  std::vector<BracketKey> p = option_keys(pred, options);
  std::vector<BracketKey> g = option_keys(gold, options);

  BracketCounts counts;
  counts.predicted = static_cast<int64_t>(p.size());
  counts.gold = static_cast<int64_t>(g.size());
  size_t i = 0, j = 0;
  while (i < p.size() && j < g.size()) {
    if (p[i] < g[j]) {
      ++i;
    } else if (g[j] < p[i]) {
      ++j;
    } else {
      ++counts.matched;
      ++i;
      ++j;
    }
  }
  return counts;
}

int crossing_brackets(const BracketSentence& pred,
                      const BracketSentence& gold) {
  require_same_tokens(pred, gold);
  std::set<std::pair<int, int>> spans;
  for (const Bracket& b : pred.brackets) spans.insert({b.start, b.end});

  int crossings = 0;
  for (const auto& [start, end] : spans) {
    for (const Bracket& g : gold.brackets) {
      bool overlap = std::max(start, g.start) < std::min(end, g.end);
      bool contains = (start <= g.start && g.end <= end) ||
                      (g.start <= start && end <= g.end);
      if (overlap && !contains) {
        ++crossings;
        break;
      }
    }
  }
  return crossings;
}

BracketScore score_bracket_corpus(const std::vector<BracketSentence>& pred,
                                  const std::vector<BracketSentence>& gold,
                                  const BracketOptions& options) {
  if (pred.size() != gold.size()) {
    throw std::invalid_argument(
        "bracket corpora have different sentence counts");
  }
  BracketScore score;
  for (size_t i = 0; i < pred.size(); ++i) {
    if (pred[i].tokens != gold[i].tokens) {
      throw std::invalid_argument(
          "sentence " + std::to_string(i + 1) +
          ": bracketed sentences tokenize differently");
    }
    BracketCounts counts = bracket_counts(pred[i], gold[i], options);
    score.matched += counts.matched;
    score.predicted += counts.predicted;
    score.gold += counts.gold;
    score.crossings += crossing_brackets(pred[i], gold[i]);
  }
  score.precision = score.predicted > 0
                        ? static_cast<double>(score.matched) /
                              static_cast<double>(score.predicted)
                        : 0.0;
  score.recall = score.gold > 0 ? static_cast<double>(score.matched) /
                                      static_cast<double>(score.gold)
                                : 0.0;
  score.f_score = f_score(score.precision, score.recall);
  score.mean_crossings = pred.empty()
                             ? 0.0
                             : static_cast<double>(score.crossings) /
                                   static_cast<double>(pred.size());
  return score;
}

}  // namespace greval
