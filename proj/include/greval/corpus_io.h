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
// The .gr corpus text format:
//
//   # sent <id> [genre <A|G|J>] [| <raw sentence text>]
//   name(v1, v2[, v3[, v4]])
//   ...
//   <blank line>
//
// Lines beginning with `%` are comments. Slot tokens: `_` is an unfilled
// slot, `Pro` an unrealised dependent, a bare relation name fills an
// initial_gr slot, anything else is a lexeme with an optional `:N` token
// index. Multi-token lexemes reduce to their final token, case-folded;
// single tokens are kept as written. The canonical writer emits LF line
// endings, a single space after commas, single spaces between header
// tokens, and one blank line after every sentence.

#ifndef GREVAL_CORPUS_IO_H_
#define GREVAL_CORPUS_IO_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "greval/corpus.h"

namespace greval {

// Parsing is total: any input yields either a corpus or error diagnostics
// with line numbers, never an exception. `corpus` is present iff no error
// was found; warnings alone do not reject a file.
struct ParseResult {
  std::optional<Corpus> corpus;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return corpus.has_value(); }
};

ParseResult parse_corpus(std::istream& in);
ParseResult parse_corpus_string(std::string_view text);

// Canonical serialization; parse(write(c)) == c. An empty corpus writes
// nothing.
void write_corpus(const Corpus& corpus, std::ostream& out);
std::string write_corpus_string(const Corpus& corpus);

enum class CorpusRole { kGold, kPredicted };

// Style checks on a parsed corpus. Warnings only:
//   - non-leaf relations in a gold corpus (gold should be fully specific),
//   - unfilled type slots in gold GRs of the modifier/iobj/clausal families,
//   - head lexemes containing uppercase (lemmas should be base forms).
std::vector<Diagnostic> validate_corpus(const Corpus& corpus, CorpusRole role);

}  // namespace greval

#endif  // GREVAL_CORPUS_IO_H_
