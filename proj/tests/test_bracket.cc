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

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

#ifndef GREVAL_DATA_DIR
#define GREVAL_DATA_DIR "data"
#endif

namespace greval {
namespace {

std::vector<BracketSentence> load_brackets(const char* path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  BracketParseResult r = parse_brackets(in);
  REQUIRE(r.ok());
  return *r.sentences;
}

BracketSentence parse_one(const char* text) {
  BracketParseResult r = parse_brackets_string(text);
  REQUIRE(r.ok());
  REQUIRE(r.sentences->size() == 1);
  return (*r.sentences)[0];
}

TEST_CASE("bracket parser reads the attachment example") {
  std::vector<BracketSentence> gold =
      load_brackets(GREVAL_DATA_DIR "/attach-gold.br");
  REQUIRE(gold.size() == 1);
  CHECK(gold[0].tokens ==
        std::vector<std::string>{"saw", "the", "man", "with", "a",
                                 "telescope"});
  CHECK(gold[0].brackets ==
        std::vector<Bracket>{{"VP", 0, 6},
                             {"NP", 1, 6},
                             {"NP", 1, 3},
                             {"PP", 3, 6},
                             {"NP", 4, 6}});

  std::vector<BracketSentence> pred =
      load_brackets(GREVAL_DATA_DIR "/attach-pred.br");
  REQUIRE(pred.size() == 1);
  CHECK(pred[0].tokens == gold[0].tokens);
  CHECK(pred[0].brackets ==
        std::vector<Bracket>{
            {"VP", 0, 6}, {"NP", 1, 3}, {"PP", 3, 6}, {"NP", 4, 6}});
}

TEST_CASE("bracket parser handles multi-line records and comments") {
  BracketParseResult r = parse_brackets_string(
      "% leading comment\n"
      "(S (NP the dog)\n"
      "% interleaved comment\n"
      "   (VP barks))\n"
      "\n"
      "(S woof)\n");
  REQUIRE(r.ok());
  REQUIRE(r.sentences->size() == 2);

  const BracketSentence& first = (*r.sentences)[0];
  CHECK(first.tokens == std::vector<std::string>{"the", "dog", "barks"});
  CHECK(first.brackets ==
        std::vector<Bracket>{{"S", 0, 3}, {"NP", 0, 2}, {"VP", 2, 3}});

  const BracketSentence& second = (*r.sentences)[1];
  CHECK(second.tokens == std::vector<std::string>{"woof"});
  CHECK(second.brackets == std::vector<Bracket>{{"S", 0, 1}});
}

TEST_CASE("bracket parser reports malformed records") {
  struct Case {
    const char* text;
    const char* message_part;
  };
  const Case cases[] = {
      {"(S (NP the dog)\n", "unbalanced parentheses"},
      {"(S)\n", "empty constituent"},
      {"(S ())\n", "missing a label"},
      {"(S (NP the dog)) extra\n", "trailing content"},
      {"dog\n", "expected '('"},
      {") dog\n", "expected '('"},
  };
  for (const Case& c : cases) {
    CAPTURE(c.text);
    BracketParseResult r = parse_brackets_string(c.text);
    CHECK(!r.ok());
    REQUIRE(!r.diagnostics.empty());
    CHECK(is_error(r.diagnostics[0]));
    CHECK(r.diagnostics[0].message.find(c.message_part) != std::string::npos);
    CHECK(r.diagnostics[0].line >= 1);
  }

  // A bad record does not poison its neighbours' diagnostics lines.
  BracketParseResult r = parse_brackets_string("(A a)\n\n(B\n\n(C c)\n");
  CHECK(!r.ok());
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].line == 3);
}

TEST_CASE("attachment example scores as expected") {
  std::vector<BracketSentence> gold =
      load_brackets(GREVAL_DATA_DIR "/attach-gold.br");
  std::vector<BracketSentence> pred =
      load_brackets(GREVAL_DATA_DIR "/attach-pred.br");

  for (bool labelled : {false, true}) {
    CAPTURE(labelled);
    BracketOptions options;
    options.labelled = labelled;
    BracketCounts counts = bracket_counts(pred[0], gold[0], options);
    CHECK(counts.matched == 4);
    CHECK(counts.predicted == 4);
    CHECK(counts.gold == 5);

    BracketScore score = score_bracket_corpus(pred, gold, options);
    CHECK(score.precision == 1.0);
    CHECK(score.recall == doctest::Approx(0.8));
    CHECK(score.f_score == doctest::Approx(8.0 / 9.0));
    CHECK(score.crossings == 0);
    CHECK(score.mean_crossings == 0.0);
  }

  // The attachment error is a pure containment difference, so the
  // reversed comparison also has no crossings.
  CHECK(crossing_brackets(gold[0], pred[0]) == 0);
}

TEST_CASE("crossing brackets counts overlap without containment") {
  BracketSentence gold = parse_one("(X (A a b c) (B d e f))\n");
  BracketSentence pred = parse_one("(X a (C b c d) e f)\n");

  // C spans [1,4): it straddles the A|B boundary at token 3.
  CHECK(crossing_brackets(pred, gold) == 1);
  // Both gold spans [0,3) and [3,6) cross pred's [1,4).
  CHECK(crossing_brackets(gold, pred) == 2);

  BracketOptions options;
  BracketCounts counts = bracket_counts(pred, gold, options);
  CHECK(counts.matched == 1);  // the root span only
  CHECK(counts.predicted == 2);
  CHECK(counts.gold == 3);

  // A span repeated through a unary chain still counts once.
  BracketSentence chain = parse_one("(X a (C (D b c d)) e f)\n");
  CHECK(crossing_brackets(chain, gold) == 1);
}

TEST_CASE("labelled comparison distinguishes same-span brackets") {
  BracketSentence gold = parse_one("(NP the man)\n");
  BracketSentence pred = parse_one("(N the man)\n");

  BracketOptions unlabelled;
  CHECK(bracket_counts(pred, gold, unlabelled).matched == 1);

  BracketOptions labelled;
  labelled.labelled = true;
  CHECK(bracket_counts(pred, gold, labelled).matched == 0);
}

TEST_CASE("drop options remove the root and unary chains") {
  std::vector<BracketSentence> gold =
      load_brackets(GREVAL_DATA_DIR "/attach-gold.br");
  std::vector<BracketSentence> pred =
      load_brackets(GREVAL_DATA_DIR "/attach-pred.br");

  BracketOptions options;
  options.drop_root = true;
  BracketCounts counts = bracket_counts(pred[0], gold[0], options);
  CHECK(counts.matched == 3);
  CHECK(counts.predicted == 3);
  CHECK(counts.gold == 4);

  // Unary chain (TOP (S (NP ...))): only the outermost bracket survives.
  BracketSentence chained = parse_one("(TOP (S (NP the man)))\n");
  BracketSentence flat = parse_one("(NP the man)\n");
  BracketOptions drop_unary;
  drop_unary.drop_unary = true;
  BracketCounts chain_counts = bracket_counts(chained, flat, drop_unary);
  CHECK(chain_counts.predicted == 1);
  CHECK(chain_counts.gold == 1);
  CHECK(chain_counts.matched == 1);  // unlabelled: TOP[0,2) matches NP[0,2)

  BracketOptions drop_unary_labelled = drop_unary;
  drop_unary_labelled.labelled = true;
  CHECK(bracket_counts(chained, flat, drop_unary_labelled).matched == 0);

  // drop_root then drop_unary: TOP goes first, then S absorbs the chain.
  BracketOptions both = drop_unary;
  both.drop_root = true;
  BracketCounts both_counts = bracket_counts(chained, flat, both);
  CHECK(both_counts.predicted == 1);  // S[0,2)
  CHECK(both_counts.gold == 0);       // flat tree loses its only bracket
  CHECK(both_counts.matched == 0);

  // Zero denominators follow the 0.0 convention, not NaN.
  BracketScore degenerate =
      score_bracket_corpus({chained}, {flat}, both);
  CHECK(degenerate.recall == 0.0);
  CHECK(degenerate.precision == 0.0);
  CHECK(degenerate.f_score == 0.0);
}

TEST_CASE("bracket matching respects multiplicity") {
  BracketSentence doubled = parse_one("(A (A a b))\n");
  BracketSentence single = parse_one("(A a b)\n");

  BracketOptions options;
  CHECK(bracket_counts(doubled, doubled, options).matched == 2);
  CHECK(bracket_counts(doubled, single, options).matched == 1);
  CHECK(bracket_counts(single, doubled, options).matched == 1);
}

TEST_CASE("bracket scoring validates its inputs") {
  BracketSentence man = parse_one("(NP the man)\n");
  BracketSentence cat = parse_one("(NP the cat)\n");
  BracketOptions options;

  CHECK_THROWS_AS(bracket_counts(man, cat, options), std::invalid_argument);
  CHECK_THROWS_AS(crossing_brackets(man, cat), std::invalid_argument);

  try {
    score_bracket_corpus({man}, {cat}, options);
    FAIL("expected std::invalid_argument");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("sentence 1") != std::string::npos);
  }

  CHECK_THROWS_AS(score_bracket_corpus({man, man}, {man}, options),
                  std::invalid_argument);

  BracketScore empty = score_bracket_corpus({}, {}, options);
  CHECK(empty.matched == 0);
  CHECK(empty.precision == 0.0);
  CHECK(empty.recall == 0.0);
  CHECK(empty.f_score == 0.0);
  CHECK(empty.mean_crossings == 0.0);
}

}  // namespace
}  // namespace greval
